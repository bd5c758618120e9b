//! Cyclic Jacobi diagonalization for small dense Hermitian matrices.
//!
//! Each step applies a unitary plane rotation `V` (a phase that makes the
//! pivot real, followed by a real Givens rotation) so that `V^dagger A V`
//! has a zero at the pivot. Pivots are visited in fixed row-major order,
//! which makes the output bit-for-bit reproducible for identical input.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Off-diagonal Frobenius norm at which the sweep loop stops, scaled by
/// `max(1, ||A||_F)`.
pub const JACOBI_THRESHOLD: f64 = 1e-14;
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Hermiticity required on input.
pub const HERMITIAN_INPUT_TOL: f64 = 1e-9;

/// Real eigenvalues of a Hermitian matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianSpectrum {
    eigenvalues: Vec<f64>,
}

impl HermitianSpectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// Eigenvalues together with the unitary whose columns are the eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub spectrum: HermitianSpectrum,
    /// Column `k` is the eigenvector of `spectrum.eigenvalues()[k]`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// `V diag(lambda) V^dagger`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = ComplexMatrix::from_diagonal(self.spectrum.eigenvalues());
        self.vectors.matmul(&d).matmul(&self.vectors.dagger())
    }
}

pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<HermitianSpectrum> {
    hermitian_eigen(m).map(|e| e.spectrum)
}

pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let asym = m.max_asymmetry().unwrap_or(0.0);
    if asym > HERMITIAN_INPUT_TOL {
        return Err(Error::NotHermitian {
            max_asymmetry: asym,
        });
    }

    let n = m.rows();
    let mut a = m.clone();
    // Work on the exactly Hermitian part.
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let scale = frobenius(&a).max(1.0);
    let mut v = ComplexMatrix::identity(n);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= JACOBI_THRESHOLD * scale {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a[(i, i)].re, i)).collect();
    // Stable sort keeps Jacobi output order for ties.
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));

    let mut vectors = ComplexMatrix::zeros(n, n);
    for (k, &(_, src)) in pairs.iter().enumerate() {
        for i in 0..n {
            vectors[(i, k)] = v[(i, src)];
        }
    }
    Ok(HermitianEigen {
        spectrum: HermitianSpectrum {
            eigenvalues: pairs.into_iter().map(|(e, _)| e).collect(),
        },
        vectors,
    })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let modulus = apq.norm();
    if modulus == 0.0 {
        return;
    }
    let phase = apq / modulus; // e^{i phi}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let theta = (aqq - app) / (2.0 * modulus);
    let t = if theta.is_infinite() {
        1.0 / (2.0 * theta)
    } else {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    let n = a.rows();
    let vqp = -phase.conj() * s;
    let vqq = phase.conj() * c;

    // A <- A V on columns p, q.
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c + akq * vqp;
        a[(k, q)] = akp * s + akq * vqq;
    }
    // A <- V^dagger A on rows p, q.
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c + aqk * vqp.conj();
        a[(q, k)] = apk * s + aqk * vqq.conj();
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(app - t * modulus, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * modulus, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * vqp;
        v[(k, q)] = vkp * s + vkq * vqq;
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

fn frobenius(a: &ComplexMatrix) -> f64 {
    a.as_slice()
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
}
