//! Mutually unbiased bases in dimensions 2 and 3, and their self-tensored
//! ("autotensor") extensions to dimension d².
//!
//! Ket phases and ordering are fixed so that coefficient matrices computed in
//! these bases line up entry-for-entry with the textbook derivations.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Tolerance for orthonormality of a basis.
pub const BASIS_TOL: f64 = 1e-9;

/// An ordered orthonormal basis of `C^dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalBasis {
    label: String,
    kets: Vec<Vec<Complex64>>,
}

impl OrthonormalBasis {
    /// Validates that `kets` form an orthonormal basis within `tol`.
    pub fn new(label: impl Into<String>, kets: Vec<Vec<Complex64>>, tol: f64) -> Result<Self> {
        let label = label.into();
        let d = kets.len();
        if d == 0 {
            return Err(Error::InvalidBasis(format!("{label}: no kets")));
        }
        for (j, ket) in kets.iter().enumerate() {
            if ket.len() != d {
                return Err(Error::InvalidBasis(format!(
                    "{label}: ket {j} has length {}, expected {d}",
                    ket.len()
                )));
            }
            if ket.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::InvalidBasis(format!(
                    "{label}: ket {j} is not finite"
                )));
            }
        }
        for i in 0..d {
            for j in i..d {
                let overlap = inner(&kets[i], &kets[j]);
                let want = if i == j { 1.0 } else { 0.0 };
                let dev = (overlap - Complex64::new(want, 0.0)).norm();
                if dev > tol {
                    let what = if i == j {
                        format!("ket {i} has norm^2 {:.17}", overlap.re)
                    } else {
                        format!("kets {i} and {j} overlap by {:e}", overlap.norm())
                    };
                    return Err(Error::InvalidBasis(format!("{label}: {what}")));
                }
            }
        }
        Ok(Self { label, kets })
    }

    /// Normalizes every ket first, then validates orthonormality.
    pub fn new_renormalized(
        label: impl Into<String>,
        mut kets: Vec<Vec<Complex64>>,
        tol: f64,
    ) -> Result<Self> {
        let label = label.into();
        for (j, ket) in kets.iter_mut().enumerate() {
            let norm = ket.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm == 0.0 || !norm.is_finite() {
                return Err(Error::InvalidBasis(format!(
                    "{label}: ket {j} cannot be normalized"
                )));
            }
            ket.iter_mut().for_each(|z| *z /= norm);
        }
        Self::new(label, kets, tol)
    }

    pub fn dim(&self) -> usize {
        self.kets.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kets(&self) -> &[Vec<Complex64>] {
        &self.kets
    }

    pub fn ket(&self, i: usize) -> &[Complex64] {
        &self.kets[i]
    }

    /// The unitary whose j-th column is the j-th ket.
    pub fn column_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_columns(&self.kets)
    }

    /// The computational basis `{|0>, ..., |d-1>}`.
    pub fn computational(dim: usize, label: impl Into<String>) -> Self {
        let kets = (0..dim)
            .map(|i| {
                let mut k = vec![Complex64::new(0.0, 0.0); dim];
                k[i] = Complex64::new(1.0, 0.0);
                k
            })
            .collect();
        Self {
            label: label.into(),
            kets,
        }
    }

    fn from_trusted(label: impl Into<String>, kets: Vec<Vec<Complex64>>) -> Self {
        let basis = Self {
            label: label.into(),
            kets,
        };
        debug_assert!(Self::new(basis.label.clone(), basis.kets.clone(), BASIS_TOL).is_ok());
        basis
    }
}

/// `<a|b>`, conjugate-linear in the first argument.
pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// A collection of bases of a common dimension.
#[derive(Debug, Clone)]
pub struct MubSet {
    dim: usize,
    bases: Vec<OrthonormalBasis>,
}

impl MubSet {
    /// Groups `bases`, checking that every distinct pair is unbiased.
    pub fn new(bases: Vec<OrthonormalBasis>, tol: f64) -> Result<Self> {
        let dim = bases
            .first()
            .map(OrthonormalBasis::dim)
            .ok_or_else(|| Error::InvalidBasis("empty basis set".into()))?;
        for (i, a) in bases.iter().enumerate() {
            for b in &bases[i + 1..] {
                let report = check_unbiased(a, b, tol)?;
                if !report.passed {
                    return Err(Error::InvalidBasis(format!(
                        "{} and {} are not mutually unbiased (deviation {:e})",
                        a.label(),
                        b.label(),
                        report.max_deviation
                    )));
                }
            }
        }
        Ok(Self { dim, bases })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bases(&self) -> &[OrthonormalBasis] {
        &self.bases
    }

    pub fn basis(&self, label: &str) -> Option<&OrthonormalBasis> {
        self.bases.iter().find(|b| b.label() == label)
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }
}

/// Which convention an overlap check used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OverlapConvention {
    /// `|<i|j>|^2` compared against `1/d`.
    Squared,
    /// `|<i|j>|` compared against `1/d`, where the bases live in dimension d².
    Unsquared,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnbiasednessReport {
    pub passed: bool,
    pub max_deviation: f64,
    pub target: f64,
    pub convention: OverlapConvention,
}

/// `| |<i|j>|^2 - 1/d | <= tol` for every pair of kets.
pub fn check_unbiased(
    b1: &OrthonormalBasis,
    b2: &OrthonormalBasis,
    tol: f64,
) -> Result<UnbiasednessReport> {
    if b1.dim() != b2.dim() {
        return Err(Error::DimensionMismatch {
            expected: b1.dim(),
            found: b2.dim(),
        });
    }
    let target = 1.0 / b1.dim() as f64;
    let max_deviation = max_overlap_deviation(b1, b2, target, |z| z.norm_sqr());
    Ok(UnbiasednessReport {
        passed: max_deviation <= tol,
        max_deviation,
        target,
        convention: OverlapConvention::Squared,
    })
}

/// `| |<ij|mn>| - 1/d | <= tol` for bases of `C^(d^2)`.
///
/// The modulus is deliberately not squared; for d = 2 self-tensored Pauli
/// bases the unsquared overlap is 1/2 while the squared one is 1/4.
pub fn check_amub(
    b1: &OrthonormalBasis,
    b2: &OrthonormalBasis,
    d: usize,
    tol: f64,
) -> Result<UnbiasednessReport> {
    let n = d * d;
    for b in [b1, b2] {
        if b.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.dim(),
            });
        }
    }
    let target = 1.0 / d as f64;
    let max_deviation = max_overlap_deviation(b1, b2, target, |z| z.norm());
    Ok(UnbiasednessReport {
        passed: max_deviation <= tol,
        max_deviation,
        target,
        convention: OverlapConvention::Unsquared,
    })
}

fn max_overlap_deviation(
    b1: &OrthonormalBasis,
    b2: &OrthonormalBasis,
    target: f64,
    measure: impl Fn(Complex64) -> f64,
) -> f64 {
    let mut worst: f64 = 0.0;
    for a in b1.kets() {
        for b in b2.kets() {
            worst = worst.max((measure(inner(a, b)) - target).abs());
        }
    }
    worst
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Eigenbases of sigma_z, sigma_x, sigma_y, labelled `alpha1..alpha3`.
pub fn pauli_mubs() -> MubSet {
    let h = FRAC_1_SQRT_2;
    let bases = vec![
        OrthonormalBasis::computational(2, "alpha1"),
        OrthonormalBasis::from_trusted(
            "alpha2",
            vec![vec![c(h, 0.0), c(h, 0.0)], vec![c(h, 0.0), c(-h, 0.0)]],
        ),
        OrthonormalBasis::from_trusted(
            "alpha3",
            vec![vec![c(h, 0.0), c(0.0, h)], vec![c(h, 0.0), c(0.0, -h)]],
        ),
    ];
    MubSet { dim: 2, bases }
}

/// Primitive cube root of unity `e^{2 pi i / 3}`.
pub fn omega() -> Complex64 {
    let angle = 2.0 * PI / 3.0;
    c(angle.cos(), angle.sin())
}

/// The four mutually unbiased bases of `C^3`, labelled `beta1..beta4`.
pub fn dim3_mubs() -> MubSet {
    let one = c(1.0, 0.0);
    let w = omega();
    let w2 = w * w;
    let s = 1.0 / 3f64.sqrt();
    let ket = |a: Complex64, b: Complex64, d: Complex64| vec![a * s, b * s, d * s];

    let bases = vec![
        OrthonormalBasis::computational(3, "beta1"),
        OrthonormalBasis::from_trusted(
            "beta2",
            vec![ket(one, one, one), ket(one, w, w2), ket(one, w2, w)],
        ),
        OrthonormalBasis::from_trusted(
            "beta3",
            vec![ket(one, one, w2), ket(one, w2, one), ket(one, w, w)],
        ),
        OrthonormalBasis::from_trusted(
            "beta4",
            vec![ket(one, one, w), ket(one, w, one), ket(one, w2, w2)],
        ),
    ];
    MubSet { dim: 3, bases }
}

/// Replaces each basis `{|i>}` of `source` by `{|i> (x) |j>}` in
/// lexicographic `(i, j)` order.
///
/// Labels follow `alphaK -> gammaK`; other labels get an `amub:` prefix.
pub fn build_amub(source: &MubSet) -> MubSet {
    let bases = source
        .bases()
        .iter()
        .map(|b| {
            let mut kets = Vec::with_capacity(b.dim() * b.dim());
            for a in b.kets() {
                for d in b.kets() {
                    kets.push(
                        a.iter()
                            .flat_map(|x| d.iter().map(move |y| x * y))
                            .collect(),
                    );
                }
            }
            let label = match b.label().strip_prefix("alpha") {
                Some(k) => format!("gamma{k}"),
                None => format!("amub:{}", b.label()),
            };
            OrthonormalBasis::from_trusted(label, kets)
        })
        .collect();
    MubSet {
        dim: source.dim() * source.dim(),
        bases,
    }
}

/// Looks up a built-in set by name: `pauli`, `dim3`, or `amub`
/// (the self-tensored Pauli set).
pub fn builtin_set(name: &str) -> Option<MubSet> {
    match name {
        "pauli" => Some(pauli_mubs()),
        "dim3" => Some(dim3_mubs()),
        "amub" => Some(build_amub(&pauli_mubs())),
        _ => None,
    }
}

pub const BUILTIN_SETS: [&str; 3] = ["pauli", "dim3", "amub"];

#[cfg(test)]
mod tests {
    use super::*;

    const TIGHT: f64 = 1e-12;

    #[test]
    fn alpha1_is_computational() {
        let set = pauli_mubs();
        assert_eq!(
            set.bases()[0].kets(),
            &[
                vec![c(1.0, 0.0), c(0.0, 0.0)],
                vec![c(0.0, 0.0), c(1.0, 0.0)]
            ]
        );
        let o = inner(set.bases()[0].ket(0), set.bases()[1].ket(0));
        assert!((o.norm_sqr() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn beta22_ket() {
        let set = dim3_mubs();
        let w = omega();
        let s = 1.0 / 3f64.sqrt();
        let k = set.bases()[1].ket(1);
        let want = [c(s, 0.0), w * s, w * w * s];
        for (a, b) in k.iter().zip(want) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn omega_is_cube_root_of_unity() {
        let w = omega();
        assert!((w * w * w - c(1.0, 0.0)).norm() < 1e-15);
        assert!((c(1.0, 0.0) + w + w * w).norm() < 1e-15);
    }

    #[test]
    fn all_builtin_pairs_unbiased() {
        for set in [pauli_mubs(), dim3_mubs()] {
            for (i, a) in set.bases().iter().enumerate() {
                for b in &set.bases()[i + 1..] {
                    let r = check_unbiased(a, b, TIGHT).unwrap();
                    assert!(
                        r.passed,
                        "{} vs {}: {:e}",
                        a.label(),
                        b.label(),
                        r.max_deviation
                    );
                }
            }
            assert!(MubSet::new(set.bases().to_vec(), TIGHT).is_ok());
        }
    }

    #[test]
    fn basis_is_not_unbiased_with_itself() {
        let set = pauli_mubs();
        let r = check_unbiased(&set.bases()[0], &set.bases()[0], 1e-9).unwrap();
        assert!(!r.passed);
        assert!((r.max_deviation - 0.5).abs() < 1e-15);
    }

    #[test]
    fn beta2_beta3_cross_overlaps() {
        let set = dim3_mubs();
        assert!(
            check_unbiased(&set.bases()[1], &set.bases()[3], TIGHT)
                .unwrap()
                .passed
        );
        for i in set.bases()[0].kets() {
            for j in set.bases()[2].kets() {
                assert!((inner(i, j).norm_sqr() - 1.0 / 3.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn dimension_mismatch() {
        let a = &pauli_mubs().bases()[0].clone();
        let b = &dim3_mubs().bases()[0].clone();
        assert_eq!(
            check_unbiased(a, b, 1e-9),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
        assert!(check_amub(a, a, 2, 1e-9).is_err());
    }

    #[test]
    fn amub_structure() {
        let gamma = build_amub(&pauli_mubs());
        assert_eq!(gamma.len(), 3);
        assert_eq!(gamma.dim(), 4);
        let labels: Vec<_> = gamma.bases().iter().map(|b| b.label()).collect();
        assert_eq!(labels, ["gamma1", "gamma2", "gamma3"]);
        assert_eq!(
            gamma.bases()[0],
            OrthonormalBasis::computational(4, "gamma1")
        );
        for b in gamma.bases() {
            assert_eq!(b.kets().len(), 4);
            let u = b.column_matrix();
            let err = u
                .dagger()
                .matmul(&u)
                .max_abs_diff(&ComplexMatrix::identity(4));
            assert!(err <= TIGHT);
        }
    }

    #[test]
    fn amub_pairs_unsquared_half_squared_quarter() {
        let gamma = build_amub(&pauli_mubs());
        let g = gamma.bases();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let r = check_amub(&g[i], &g[j], 2, TIGHT).unwrap();
            assert!(
                r.passed,
                "gamma{} vs gamma{}: {:e}",
                i + 1,
                j + 1,
                r.max_deviation
            );
            assert_eq!(r.target, 0.5);
            let sq = check_unbiased(&g[i], &g[j], TIGHT).unwrap();
            assert!(sq.passed, "squared overlaps must equal 1/4");
            assert_eq!(sq.target, 0.25);
        }
        assert!(!check_amub(&g[0], &g[0], 2, 1e-9).unwrap().passed);
    }

    #[test]
    fn gamma2_gamma3_all_sixteen_overlaps() {
        let gamma = build_amub(&pauli_mubs());
        let (g2, g3) = (&gamma.bases()[1], &gamma.bases()[2]);
        for a in g2.kets() {
            for b in g3.kets() {
                assert!((inner(a, b).norm() - 0.5).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn constructed_bases_are_unitary() {
        for set in [pauli_mubs(), dim3_mubs()] {
            for b in set.bases() {
                let u = b.column_matrix();
                let err = u
                    .dagger()
                    .matmul(&u)
                    .max_abs_diff(&ComplexMatrix::identity(set.dim()));
                assert!(err <= TIGHT);
            }
        }
    }

    #[test]
    fn off_normal_kets_rejected_unless_renormalized() {
        let kets = vec![
            vec![c(2.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ];
        assert!(matches!(
            OrthonormalBasis::new("b", kets.clone(), BASIS_TOL),
            Err(Error::InvalidBasis(_))
        ));
        let b = OrthonormalBasis::new_renormalized("b", kets, BASIS_TOL).unwrap();
        assert_eq!(b.ket(0)[0], c(1.0, 0.0));
    }

    #[test]
    fn non_orthogonal_kets_rejected() {
        let h = FRAC_1_SQRT_2;
        let kets = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(h, 0.0), c(h, 0.0)]];
        assert!(OrthonormalBasis::new_renormalized("b", kets, BASIS_TOL).is_err());
    }
}
