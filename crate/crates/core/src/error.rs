use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max |m - m^dagger| entry = {max_asymmetry:e})")]
    NotHermitian { max_asymmetry: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceMismatch { trace: f64 },

    #[error("matrix is not positive semidefinite (most negative eigenvalue = {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error(
        "Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("Bloch vector has squared norm {norm_sq}, which exceeds 1")]
    BlochNormExceeded { norm_sq: f64 },

    #[error("parameter {name} = {value} is outside [{min}, {max}]")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("level {level} lies outside the field range [{min}, {max}]")]
    EmptyLevelSet { level: f64, min: f64, max: f64 },

    #[error("grid resolution must be at least 2, got {0}")]
    InvalidResolution(usize),

    #[error("malformed file: {0}")]
    Format(String),
}
