//! Constructors for the state families: qubit Bloch states, three-level
//! X-type states, and two-qubit Bell-diagonal states with their Werner and
//! isotropic one-parameter slices.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{validate_density, ComplexMatrix, DensityMatrix, PauliSet, STATE_TOL};

/// Slack allowed on `x^2 + y^2 + z^2 <= 1`.
pub const BLOCH_NORM_SLACK: f64 = 1e-12;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Real vector `(x, y, z)` in the unit ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Self { x, y, z };
        let norm_sq = v.norm_sq();
        if !norm_sq.is_finite() || norm_sq > 1.0 + BLOCH_NORM_SLACK {
            return Err(Error::BlochNormExceeded { norm_sq });
        }
        Ok(v)
    }

    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }
}

/// `(I + r . sigma) / 2`.
pub fn bloch_state(v: BlochVector) -> DensityMatrix {
    let BlochVector { x, y, z } = v;
    let off = c(x / 2.0, -y / 2.0);
    let m = ComplexMatrix::from_rows(&[
        [c((1.0 + z) / 2.0, 0.0), off],
        [off.conj(), c((1.0 - z) / 2.0, 0.0)],
    ]);
    validate_density(m, STATE_TOL).expect("Bloch-ball states are physical")
}

/// A Hermitian unit-trace matrix that may or may not be positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct StateMatrix {
    pub matrix: ComplexMatrix,
    pub physical: bool,
}

impl StateMatrix {
    fn classify(matrix: ComplexMatrix) -> Self {
        let physical = validate_density(matrix.clone(), STATE_TOL).is_ok();
        Self { matrix, physical }
    }

    fn enforce(self, require_physical: bool) -> Result<Self> {
        if require_physical && !self.physical {
            return Err(validate_density(self.matrix, STATE_TOL).unwrap_err());
        }
        Ok(self)
    }

    pub fn into_density(self) -> Result<DensityMatrix> {
        validate_density(self.matrix, STATE_TOL)
    }
}

impl AsRef<ComplexMatrix> for StateMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// Placement of the coupled pair inside a 3x3 X-type state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum XVariant {
    /// Levels 0 and 2 coupled; `[[x,0,z],[0,1-x-y,0],[z,0,y]]`.
    X,
    /// Levels 1 and 2 coupled; `[[1-x-y,0,0],[0,x,z],[0,z,y]]`.
    Delta,
    /// Levels 0 and 1 coupled; `[[x,z,0],[z,y,0],[0,0,1-x-y]]`.
    Nabla,
}

impl XVariant {
    pub const ALL: [XVariant; 3] = [XVariant::X, XVariant::Delta, XVariant::Nabla];

    /// Positions of `(x, y, rest)` on the diagonal.
    fn layout(self) -> [usize; 3] {
        match self {
            XVariant::X => [0, 2, 1],
            XVariant::Delta => [1, 2, 0],
            XVariant::Nabla => [0, 1, 2],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            XVariant::X => "x",
            XVariant::Delta => "delta",
            XVariant::Nabla => "nabla",
        }
    }
}

impl fmt::Display for XVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for XVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "x" => Ok(XVariant::X),
            "delta" => Ok(XVariant::Delta),
            "nabla" => Ok(XVariant::Nabla),
            other => Err(Error::Format(format!("unknown X-state variant `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateParams {
    pub variant: XVariant,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Builds the 3x3 X-type state. Trace is 1 for any real parameters; positivity
/// is only enforced when `require_physical` is set.
pub fn x3_state(p: XStateParams, require_physical: bool) -> Result<StateMatrix> {
    StateMatrix::classify(x3_matrix(p)).enforce(require_physical)
}

/// The raw X-type matrix, without any physicality check.
pub fn x3_matrix(p: XStateParams) -> ComplexMatrix {
    let [ix, iy, irest] = p.variant.layout();
    let mut m = ComplexMatrix::zeros(3, 3);
    m[(ix, ix)] = c(p.x, 0.0);
    m[(iy, iy)] = c(p.y, 0.0);
    m[(irest, irest)] = c(1.0 - p.x - p.y, 0.0);
    m[(ix, iy)] = c(p.z, 0.0);
    m[(iy, ix)] = c(p.z, 0.0);
    m
}

/// Correlation coefficients `(c1, c2, c3)` of a Bell-diagonal state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationTriple {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl CorrelationTriple {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        for (name, value) in [("c1", c1), ("c2", c2), ("c3", c3)] {
            check_range(name, value, -1.0, 1.0)?;
        }
        Ok(Self { c1, c2, c3 })
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    /// Whether the Bell-diagonal matrix is positive semidefinite, decided from
    /// its eigenvalues.
    pub fn is_physical(&self) -> bool {
        validate_density(bell_diagonal_matrix(*self), STATE_TOL).is_ok()
    }
}

fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if !(min..=max).contains(&value) {
        return Err(Error::ParamOutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(())
}

/// `(I (x) I + sum_i c_i sigma_i (x) sigma_i) / 4`.
pub fn bell_diagonal_matrix(t: CorrelationTriple) -> ComplexMatrix {
    let paulis = PauliSet::new();
    let mut acc = paulis.identity_2.kron(&paulis.identity_2);
    for (ci, s) in t.as_array().into_iter().zip(paulis.sigmas()) {
        acc = &acc + &s.kron(s).scale_real(ci);
    }
    acc.scale_real(0.25)
}

pub fn bell_diagonal(t: CorrelationTriple, require_physical: bool) -> Result<StateMatrix> {
    StateMatrix::classify(bell_diagonal_matrix(t)).enforce(require_physical)
}

/// Werner state with weight `p`, i.e. `c1 = c2 = c3 = 4p/3 - 1`.
pub fn werner(p: f64) -> Result<DensityMatrix> {
    check_range("p", p, 0.0, 1.0)?;
    let diag = c(p / 3.0, 0.0);
    let inner = c(0.5 - p / 3.0, 0.0);
    let coupling = c(2.0 * p / 3.0 - 0.5, 0.0);
    let o = c(0.0, 0.0);
    let m = ComplexMatrix::from_rows(&[
        [diag, o, o, o],
        [o, inner, coupling, o],
        [o, coupling, inner, o],
        [o, o, o, diag],
    ]);
    validate_density(m, STATE_TOL)
}

pub fn werner_triple(p: f64) -> Result<CorrelationTriple> {
    check_range("p", p, 0.0, 1.0)?;
    let t = 4.0 * p / 3.0 - 1.0;
    CorrelationTriple::new(t, t, t)
}

/// Isotropic state with fidelity `f`, i.e. `c1 = c3 = (4F-1)/3`, `c2 = -(4F-1)/3`.
pub fn isotropic(f: f64) -> Result<DensityMatrix> {
    check_range("F", f, 0.0, 1.0)?;
    let corner = c(f / 3.0 + 1.0 / 6.0, 0.0);
    let coupling = c(2.0 * f / 3.0 - 1.0 / 6.0, 0.0);
    let inner = c(1.0 / 3.0 - f / 3.0, 0.0);
    let o = c(0.0, 0.0);
    let m = ComplexMatrix::from_rows(&[
        [corner, o, o, coupling],
        [o, inner, o, o],
        [o, o, inner, o],
        [coupling, o, o, corner],
    ]);
    validate_density(m, STATE_TOL)
}

pub fn isotropic_triple(f: f64) -> Result<CorrelationTriple> {
    check_range("F", f, 0.0, 1.0)?;
    let t = (4.0 * f - 1.0) / 3.0;
    CorrelationTriple::new(t, -t, t)
}
