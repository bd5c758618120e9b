use super::eigen::{hermitian_eigenvalues, HermitianSpectrum};
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Default tolerance for accepting a matrix as a quantum state.
pub const STATE_TOL: f64 = 1e-9;

/// A validated quantum state: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn spectrum(&self) -> HermitianSpectrum {
        hermitian_eigenvalues(&self.mat).expect("validated density matrix is Hermitian")
    }

    /// Maximally mixed state `I/d`.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            mat: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        }
    }
}

impl AsRef<ComplexMatrix> for DensityMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.mat
    }
}

/// Checks the state axioms and wraps `m` unmodified.
pub fn validate_density(m: ComplexMatrix, tol: f64) -> Result<DensityMatrix> {
    assert!(tol > 0.0, "tolerance must be positive");
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let asym = m.max_asymmetry().unwrap_or(0.0);
    if asym > tol {
        return Err(Error::NotHermitian {
            max_asymmetry: asym,
        });
    }
    let trace = m.trace().re;
    if (trace - 1.0).abs() > tol {
        return Err(Error::TraceMismatch { trace });
    }
    let spectrum = hermitian_eigenvalues(&m)?;
    let min = spectrum.min();
    if min < -tol {
        return Err(Error::NotPositive {
            min_eigenvalue: min,
        });
    }
    Ok(DensityMatrix { mat: m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn maximally_mixed_qubit_accepted() {
        let m = ComplexMatrix::from_diagonal(&[0.5, 0.5]);
        let rho = validate_density(m.clone(), STATE_TOL).unwrap();
        assert_eq!(rho.matrix(), &m);
        assert_eq!(rho, DensityMatrix::maximally_mixed(2));
    }

    #[test]
    fn rank_one_real_state_accepted() {
        // Characteristic polynomial t^2 - t + (0.16 - 0.16) = t(t - 1): eigenvalues 1 and 0.
        let m = ComplexMatrix::from_real_rows(&[[0.8, 0.4], [0.4, 0.2]]);
        let rho = validate_density(m, STATE_TOL).unwrap();
        let s = rho.spectrum();
        assert!((s.eigenvalues()[0] - 1.0).abs() < 1e-12);
        assert!(s.eigenvalues()[1].abs() < 1e-12);
    }

    #[test]
    fn trace_mismatch_reported() {
        let err =
            validate_density(ComplexMatrix::from_diagonal(&[0.5, 0.4]), STATE_TOL).unwrap_err();
        match err {
            Error::TraceMismatch { trace } => assert!((trace - 0.9).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_hermitian_reported() {
        let mut m = ComplexMatrix::from_diagonal(&[0.5, 0.5]);
        m[(0, 1)] = Complex64::new(0.0, 0.1);
        m[(1, 0)] = Complex64::new(0.0, 0.1);
        match validate_density(m, STATE_TOL).unwrap_err() {
            Error::NotHermitian { max_asymmetry } => assert!((max_asymmetry - 0.2).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn negative_eigenvalue_reported() {
        // Eigenvalues 0.5 +/- 0.7.
        let m = ComplexMatrix::from_real_rows(&[[0.5, 0.7], [0.7, 0.5]]);
        match validate_density(m, STATE_TOL).unwrap_err() {
            Error::NotPositive { min_eigenvalue } => assert!((min_eigenvalue + 0.2).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn not_square() {
        let m = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            validate_density(m, STATE_TOL),
            Err(Error::NotSquare { .. })
        ));
    }
}
