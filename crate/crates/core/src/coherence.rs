//! Coherence of a state relative to an orthonormal basis.
//!
//! A state is re-expressed in a basis `{|b_i>}` by solving
//! `rho = sum_ij a_ij |b_i><b_j|`, whose unique solution is `a = U^dagger rho U`
//! with `U` the column matrix of the basis. Both coherence measures are then
//! read off `a`. The closed-form expressions for the qubit, X-state and
//! Bell-diagonal families live alongside as an independent route.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix, DensityMatrix};
use crate::mub::OrthonormalBasis;
use crate::states::{BlochVector, CorrelationTriple};

/// A state written in a particular basis.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMatrix {
    pub entries: ComplexMatrix,
    pub basis_label: String,
}

impl CoefficientMatrix {
    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }
}

/// `U^dagger rho U`. Accepts any square operator so that unphysical X-type
/// matrices can be treated the same way as states.
pub fn coefficients_in_basis<M: AsRef<ComplexMatrix>>(
    rho: &M,
    basis: &OrthonormalBasis,
) -> Result<CoefficientMatrix> {
    let rho = rho.as_ref();
    check_dims(rho, basis)?;
    Ok(CoefficientMatrix {
        entries: rho.conjugate_by(&basis.column_matrix()),
        basis_label: basis.label().to_owned(),
    })
}

fn check_dims(rho: &ComplexMatrix, basis: &OrthonormalBasis) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::NotSquare {
            rows: rho.rows(),
            cols: rho.cols(),
        });
    }
    if rho.rows() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.rows(),
            found: basis.dim(),
        });
    }
    Ok(())
}

/// Sum of the moduli of the off-diagonal coefficients.
pub fn l1_coherence<M: AsRef<ComplexMatrix>>(rho: &M, basis: &OrthonormalBasis) -> Result<f64> {
    Ok(coefficients_in_basis(rho, basis)?.entries.off_diagonal_l1())
}

/// `-sum p log2 p` with `0 log 0 = 0`. Tiny negative round-off is treated as 0.
pub fn shannon_entropy_bits(probabilities: &[f64]) -> f64 {
    probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    shannon_entropy_bits(rho.spectrum().eigenvalues())
}

/// `S(diag(a)) - S(rho)` in bits.
pub fn rel_entropy_coherence(rho: &DensityMatrix, basis: &OrthonormalBasis) -> Result<f64> {
    let a = coefficients_in_basis(rho, basis)?;
    let diag: Vec<f64> = a.entries.diagonal().iter().map(|z| z.re).collect();
    let spectrum = hermitian_eigenvalues(rho.matrix())?;
    Ok(shannon_entropy_bits(&diag) - shannon_entropy_bits(spectrum.eigenvalues()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoherenceReport {
    pub basis: String,
    pub l1: f64,
    /// `None` when the input is Hermitian with unit trace but not positive.
    pub relative_entropy: Option<f64>,
}

pub fn coherence_report(rho: &DensityMatrix, basis: &OrthonormalBasis) -> Result<CoherenceReport> {
    Ok(CoherenceReport {
        basis: basis.label().to_owned(),
        l1: l1_coherence(rho, basis)?,
        relative_entropy: Some(rel_entropy_coherence(rho, basis)?),
    })
}

/// The three Pauli eigenbases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliBasis {
    Alpha1,
    Alpha2,
    Alpha3,
}

impl PauliBasis {
    pub const ALL: [PauliBasis; 3] = [PauliBasis::Alpha1, PauliBasis::Alpha2, PauliBasis::Alpha3];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// The three self-tensored Pauli bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmubBasis {
    Gamma1,
    Gamma2,
    Gamma3,
}

impl AmubBasis {
    pub const ALL: [AmubBasis; 3] = [AmubBasis::Gamma1, AmubBasis::Gamma2, AmubBasis::Gamma3];

    pub fn index(self) -> usize {
        self as usize
    }

    /// `(a, b, e)` such that the state in this basis reads
    /// `1/4 [[1+a,0,0,b-e],[0,1-a,b+e,0],[0,b+e,1-a,0],[b-e,0,0,1+a]]`.
    fn roles(self, t: CorrelationTriple) -> (f64, f64, f64) {
        let CorrelationTriple { c1, c2, c3 } = t;
        match self {
            AmubBasis::Gamma1 => (c3, c1, c2),
            AmubBasis::Gamma2 => (c1, c3, c2),
            AmubBasis::Gamma3 => (c2, c3, c1),
        }
    }
}

impl fmt::Display for AmubBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gamma{}", self.index() + 1)
    }
}

impl FromStr for AmubBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma1" | "1" => Ok(AmubBasis::Gamma1),
            "gamma2" | "2" => Ok(AmubBasis::Gamma2),
            "gamma3" | "3" => Ok(AmubBasis::Gamma3),
            _ => Err(Error::Format(format!("unknown basis `{s}`"))),
        }
    }
}

/// l1 coherence of a Bloch state in a Pauli eigenbasis.
pub fn qubit_closed_form(v: BlochVector, which: PauliBasis) -> f64 {
    let BlochVector { x, y, z } = v;
    match which {
        PauliBasis::Alpha1 => x.hypot(y),
        PauliBasis::Alpha2 => z.hypot(y),
        PauliBasis::Alpha3 => z.hypot(x),
    }
}

/// The coefficient matrix of a Bloch state in a Pauli eigenbasis.
pub fn qubit_coefficients_closed_form(v: BlochVector, which: PauliBasis) -> ComplexMatrix {
    let BlochVector { x, y, z } = v;
    // (diagonal weight, off-diagonal a_12) per basis
    let (w, a12) = match which {
        PauliBasis::Alpha1 => (z, Complex64::new(x, -y)),
        PauliBasis::Alpha2 => (x, Complex64::new(z, y)),
        PauliBasis::Alpha3 => (y, Complex64::new(z, -x)),
    };
    ComplexMatrix::from_rows(&[
        [Complex64::new(1.0 + w, 0.0), a12],
        [a12.conj(), Complex64::new(1.0 - w, 0.0)],
    ])
    .scale_real(0.5)
}

/// Coefficients of the `[[x,0,z],[0,1-x-y,0],[z,0,y]]` X state in `beta2`.
///
/// The last diagonal entry is `(1 - z)/3`, which is what unit trace forces.
pub fn xstate_beta2_coefficients(x: f64, y: f64, z: f64) -> ComplexMatrix {
    let s3 = 3f64.sqrt();
    let c = Complex64::new;
    let b11 = c((1.0 + 2.0 * z) / 3.0, 0.0);
    let b22 = c((1.0 - z) / 3.0, 0.0);
    let b33 = c((1.0 - z) / 3.0, 0.0);
    let b12 = c(
        (3.0 * x + z - 1.0) / 6.0,
        -s3 * (x + 2.0 * y + z - 1.0) / 6.0,
    );
    let b13 = c(
        (3.0 * x + z - 1.0) / 6.0,
        s3 * (x + 2.0 * y + z - 1.0) / 6.0,
    );
    let b23 = c(
        (3.0 * x - 2.0 * z - 1.0) / 6.0,
        -s3 * (x + 2.0 * y - 2.0 * z - 1.0) / 6.0,
    );
    ComplexMatrix::from_rows(&[
        [b11, b12, b13],
        [b12.conj(), b22, b23],
        [b13.conj(), b23.conj(), b33],
    ])
}

/// `2 (|b12| + |b13| + |b23|)` read from a 3x3 coefficient matrix.
pub fn upper_triangle_l1(a: &ComplexMatrix) -> f64 {
    2.0 * (a[(0, 1)].norm() + a[(0, 2)].norm() + a[(1, 2)].norm())
}

/// `(|a - b| + |a + b|) / 2`.
fn half_sum_diff(a: f64, b: f64) -> f64 {
    0.5 * ((a - b).abs() + (a + b).abs())
}

/// l1 coherence of a Bell-diagonal state in one of the gamma bases.
pub fn bell_closed_form(t: CorrelationTriple, which: AmubBasis) -> f64 {
    let (_, b, e) = which.roles(t);
    half_sum_diff(b, e)
}

/// The Bell-diagonal state written in one of the gamma bases.
pub fn bell_coefficients_closed_form(t: CorrelationTriple, which: AmubBasis) -> ComplexMatrix {
    let (a, b, e) = which.roles(t);
    ComplexMatrix::from_real_rows(&[
        [1.0 + a, 0.0, 0.0, b - e],
        [0.0, 1.0 - a, b + e, 0.0],
        [0.0, b + e, 1.0 - a, 0.0],
        [b - e, 0.0, 0.0, 1.0 + a],
    ])
    .scale_real(0.25)
}

/// Sum of the l1 coherences over the three gamma bases.
pub fn bell_sum(t: CorrelationTriple) -> f64 {
    bell_sum_raw(t.c1, t.c2, t.c3)
}

/// [`bell_sum`] without range validation, for grid evaluation.
pub fn bell_sum_raw(c1: f64, c2: f64, c3: f64) -> f64 {
    half_sum_diff(c1, c2) + half_sum_diff(c3, c2) + half_sum_diff(c3, c1)
}

/// `max(|c1|,|c2|) + max(|c2|,|c3|) + max(|c1|,|c3|)`, equal to [`bell_sum`].
pub fn bell_sum_pairwise_max(t: CorrelationTriple) -> f64 {
    let [a, b, d] = t.as_array().map(f64::abs);
    a.max(b) + b.max(d) + a.max(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mub::{build_amub, dim3_mubs, pauli_mubs};
    use crate::states::{bell_diagonal, bloch_state, x3_matrix, XStateParams, XVariant};
    use proptest::prelude::*;

    fn bv(x: f64, y: f64, z: f64) -> BlochVector {
        BlochVector::new(x, y, z).unwrap()
    }

    fn triple(c1: f64, c2: f64, c3: f64) -> CorrelationTriple {
        CorrelationTriple::new(c1, c2, c3).unwrap()
    }

    #[test]
    fn alpha2_coefficients_match_worked_example() {
        let rho = bloch_state(bv(0.6, 0.0, 0.8));
        let a = coefficients_in_basis(&rho, &pauli_mubs().bases()[1]).unwrap();
        let want = ComplexMatrix::from_real_rows(&[[0.8, 0.4], [0.4, 0.2]]);
        assert!(a.entries.max_abs_diff(&want) < 1e-15);
        assert_eq!(a.basis_label, "alpha2");
    }

    #[test]
    fn computational_basis_is_identity_map() {
        let rho = bloch_state(bv(0.1, -0.3, 0.2));
        let a = coefficients_in_basis(&rho, &pauli_mubs().bases()[0]).unwrap();
        assert_eq!(&a.entries, rho.matrix());
    }

    #[test]
    fn beta2_coefficients_at_half_half_half() {
        let m = x3_matrix(XStateParams {
            variant: XVariant::X,
            x: 0.5,
            y: 0.5,
            z: 0.5,
        });
        let a = coefficients_in_basis(&m, &dim3_mubs().bases()[1]).unwrap();
        assert!((a.get(0, 0).re - 2.0 / 3.0).abs() < 1e-15);
        assert!((a.get(1, 1).re - 1.0 / 6.0).abs() < 1e-15);
        assert!((a.get(2, 2).re - 1.0 / 6.0).abs() < 1e-15);
        assert!(
            a.entries
                .max_abs_diff(&xstate_beta2_coefficients(0.5, 0.5, 0.5))
                < 1e-15
        );
        // The unit-trace-violating value (1 - 3z)/3 would be -1/6 here.
        assert!((a.get(2, 2).re - (1.0 - 3.0 * 0.5) / 3.0).abs() > 0.3);
    }

    #[test]
    fn dimension_mismatch() {
        let rho = bloch_state(bv(0.0, 0.0, 0.0));
        let err = l1_coherence(&rho, &dim3_mubs().bases()[0]).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn l1_examples() {
        let mixed = DensityMatrix::maximally_mixed(3);
        for b in dim3_mubs().bases() {
            assert!(l1_coherence(&mixed, b).unwrap() < 1e-15);
        }
        let rho = bloch_state(bv(0.6, 0.0, 0.8));
        assert!((l1_coherence(&rho, &pauli_mubs().bases()[0]).unwrap() - 0.6).abs() < 1e-15);
        let phi = bell_diagonal(triple(1.0, -1.0, 1.0), true).unwrap();
        let gamma = build_amub(&pauli_mubs());
        assert!((l1_coherence(&phi, &gamma.bases()[0]).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn relative_entropy_examples() {
        let plus = bloch_state(bv(1.0, 0.0, 0.0));
        let alpha = pauli_mubs();
        let r1 = rel_entropy_coherence(&plus, &alpha.bases()[0]).unwrap();
        assert!((r1 - 1.0).abs() < 1e-12, "{r1}");
        let r2 = rel_entropy_coherence(&plus, &alpha.bases()[1]).unwrap();
        assert!(r2.abs() < 1e-12, "{r2}");
        let mixed = DensityMatrix::maximally_mixed(2);
        let r3 = rel_entropy_coherence(&mixed, &alpha.bases()[2]).unwrap();
        assert!(r3.abs() < 1e-12);
        let report = coherence_report(&plus, &alpha.bases()[0]).unwrap();
        assert_eq!(report.basis, "alpha1");
        assert!((report.l1 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn entropy_conventions() {
        assert_eq!(shannon_entropy_bits(&[1.0, 0.0]), 0.0);
        assert_eq!(shannon_entropy_bits(&[0.5, 0.5]), 1.0);
        assert_eq!(shannon_entropy_bits(&[0.25; 4]), 2.0);
        assert_eq!(shannon_entropy_bits(&[1.0, -1e-17]), 0.0);
    }

    #[test]
    fn qubit_closed_form_examples() {
        let v = bv(0.6, 0.0, 0.8);
        assert!((qubit_closed_form(v, PauliBasis::Alpha1) - 0.6).abs() < 1e-15);
        assert!((qubit_closed_form(v, PauliBasis::Alpha2) - 0.8).abs() < 1e-15);
        assert!((qubit_closed_form(v, PauliBasis::Alpha3) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bell_closed_form_examples() {
        let t = triple(1.0, 0.0, 0.0);
        assert_eq!(bell_closed_form(t, AmubBasis::Gamma1), 1.0);
        assert_eq!(bell_closed_form(t, AmubBasis::Gamma2), 0.0);
        assert_eq!(bell_closed_form(t, AmubBasis::Gamma3), 1.0);
        assert_eq!(bell_sum(triple(0.0, 0.0, 0.0)), 0.0);
        assert_eq!(bell_sum(t), 2.0);
        let third = 1.0 / 3.0;
        assert!((bell_sum(triple(third, third, third)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn gamma_coefficients_at_phi_plus() {
        let t = triple(1.0, -1.0, 1.0);
        let g2 = bell_coefficients_closed_form(t, AmubBasis::Gamma2);
        assert_eq!(g2[(0, 0)].re, 0.5);
        let zero = triple(0.0, 0.0, 0.0);
        let gamma = build_amub(&pauli_mubs());
        let rho = bell_diagonal(zero, true).unwrap();
        for b in gamma.bases() {
            let a = coefficients_in_basis(&rho, b).unwrap();
            assert!(
                a.entries
                    .max_abs_diff(&ComplexMatrix::identity(4).scale_real(0.25))
                    < 1e-15
            );
        }
    }

    #[test]
    fn amub_basis_names() {
        assert_eq!(AmubBasis::Gamma2.to_string(), "gamma2");
        assert_eq!("gamma3".parse::<AmubBasis>().unwrap(), AmubBasis::Gamma3);
    }

    proptest! {
        #[test]
        fn half_sum_diff_is_max_abs(a in -1.0f64..1.0, b in -1.0f64..1.0) {
            prop_assert!((half_sum_diff(a, b) - a.abs().max(b.abs())).abs() <= 1e-13);
        }

        #[test]
        fn gamma_closed_forms_match_conjugation(c1 in -1.0f64..1.0, c2 in -1.0f64..1.0, c3 in -1.0f64..1.0) {
            let t = triple(c1, c2, c3);
            let rho = crate::states::bell_diagonal_matrix(t);
            let gamma = build_amub(&pauli_mubs());
            for which in AmubBasis::ALL {
                let b = &gamma.bases()[which.index()];
                let a = coefficients_in_basis(&rho, b).unwrap();
                prop_assert!(a.entries.max_abs_diff(&bell_coefficients_closed_form(t, which)) <= 1e-15);
                prop_assert!((a.entries.off_diagonal_l1() - bell_closed_form(t, which)).abs() <= 1e-15);
            }
        }

        #[test]
        fn relative_entropy_nonnegative(x in -0.57f64..0.57, y in -0.57f64..0.57, z in -0.57f64..0.57) {
            let rho = bloch_state(bv(x, y, z));
            for b in pauli_mubs().bases() {
                prop_assert!(rel_entropy_coherence(&rho, b).unwrap() >= -1e-10);
            }
        }

        #[test]
        fn l1_zero_iff_diagonal(x in -0.57f64..0.57, y in -0.57f64..0.57, z in -0.57f64..0.57) {
            let rho = bloch_state(bv(x, y, z));
            for b in pauli_mubs().bases() {
                let a = coefficients_in_basis(&rho, b).unwrap();
                let l1 = a.entries.off_diagonal_l1();
                prop_assert!(l1 >= 0.0);
                let diagonal = (0..2).all(|i| (0..2).all(|j| i == j || a.get(i, j).norm() <= 1e-12));
                prop_assert_eq!(l1 <= 2e-12, diagonal);
            }
        }
    }
}
