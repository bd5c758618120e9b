//! Dense complex linear algebra for operators of dimension at most 16.

mod density;
mod eigen;
mod matrix;

pub use density::{validate_density, DensityMatrix, STATE_TOL};
pub use eigen::{
    hermitian_eigen, hermitian_eigenvalues, HermitianEigen, HermitianSpectrum, HERMITIAN_INPUT_TOL,
    JACOBI_MAX_SWEEPS, JACOBI_THRESHOLD,
};
pub use matrix::{tensor_product, ComplexMatrix, PauliSet};

/// Tolerance used when checking closed-form identities.
pub const IDENTITY_TOL: f64 = 1e-12;
