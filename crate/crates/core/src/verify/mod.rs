//! Seeded verification of the closed-form coherence identities.
//!
//! Each identity is a [`Claim`] registered by id in a [`ClaimRegistry`];
//! callers pick claims by name at run time (`qubit`, `xstate`, `bell`,
//! `werner-iso`) or run all of them in registration order.

mod bell;
mod qubit;
mod report;
pub mod sampling;
mod werner_iso;
mod xstate;

use serde::Serialize;

pub use bell::{verify_bell_forms, BellForms, BELL_ID};
pub use qubit::{verify_qubit_bound, verify_qubit_pure, QubitBound, QUBIT_ID};
pub use report::VerificationReport;
pub use werner_iso::{verify_werner_isotropic, WernerIsotropic, WERNER_ISO_ID};
pub use xstate::{verify_xstate_equality, XDraws, XStateEquality, XSTATE_ID};

pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_GRID_POINTS: usize = 21;
/// Size of the error injected by [`Claim::self_test`].
pub const SELF_TEST_PERTURBATION: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct RunParams {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    /// Used by grid-based claims instead of `samples`.
    pub grid_points: usize,
    /// Added to one closed-form value; zero outside self-tests.
    pub perturbation: f64,
}

impl Default for RunParams {
    fn default() -> Self {
        Self {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            tolerance: DEFAULT_TOLERANCE,
            grid_points: DEFAULT_GRID_POINTS,
            perturbation: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfTestOutcome {
    pub claim_id: String,
    pub perturbation: f64,
    /// True when the perturbed run failed.
    pub detected: bool,
    pub report: VerificationReport,
}

/// A checkable identity.
pub trait Claim: Send + Sync {
    fn id(&self) -> &str;

    /// The identity being checked, in words.
    fn statement(&self) -> &str;

    fn run(&self, params: &RunParams) -> VerificationReport;

    /// Re-runs with a perturbed closed form; the run is expected to fail.
    fn self_test(&self, params: &RunParams) -> SelfTestOutcome {
        let perturbed = RunParams {
            perturbation: SELF_TEST_PERTURBATION,
            ..params.clone()
        };
        let report = self.run(&perturbed);
        SelfTestOutcome {
            claim_id: self.id().to_owned(),
            perturbation: SELF_TEST_PERTURBATION,
            detected: !report.passed,
            report,
        }
    }
}

/// Claims keyed by id, kept in registration order.
#[derive(Default)]
pub struct ClaimRegistry {
    claims: Vec<Box<dyn Claim>>,
}

impl ClaimRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// The four built-in claims.
    pub fn builtin() -> Self {
        let mut reg = Self::new();
        reg.register(Box::new(QubitBound));
        reg.register(Box::new(XStateEquality::default()));
        reg.register(Box::new(BellForms));
        reg.register(Box::new(WernerIsotropic));
        reg
    }

    /// Adds a claim, replacing any existing claim with the same id.
    pub fn register(&mut self, claim: Box<dyn Claim>) {
        match self.claims.iter().position(|c| c.id() == claim.id()) {
            Some(i) => self.claims[i] = claim,
            None => self.claims.push(claim),
        }
    }

    pub fn get(&self, id: &str) -> Option<&dyn Claim> {
        self.claims
            .iter()
            .find(|c| c.id() == id)
            .map(|c| c.as_ref())
    }

    pub fn ids(&self) -> Vec<&str> {
        self.claims.iter().map(|c| c.id()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Claim> {
        self.claims.iter().map(|c| c.as_ref())
    }

    pub fn run(&self, id: &str, params: &RunParams) -> Option<VerificationReport> {
        self.get(id).map(|c| c.run(params))
    }

    pub fn run_all(&self, params: &RunParams) -> Vec<VerificationReport> {
        self.iter().map(|c| c.run(params)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Always(bool);

    impl Claim for Always {
        fn id(&self) -> &str {
            "always"
        }
        fn statement(&self) -> &str {
            "constant"
        }
        fn run(&self, params: &RunParams) -> VerificationReport {
            VerificationReport {
                claim_id: "always".into(),
                samples: 0,
                seed: params.seed,
                max_deviation: 0.0,
                tolerance: params.tolerance,
                passed: self.0,
                details: String::new(),
            }
        }
    }

    #[test]
    fn builtin_ids_in_order() {
        assert_eq!(
            ClaimRegistry::builtin().ids(),
            ["qubit", "xstate", "bell", "werner-iso"]
        );
    }

    #[test]
    fn register_replaces_same_id() {
        let mut reg = ClaimRegistry::new();
        reg.register(Box::new(Always(true)));
        reg.register(Box::new(Always(false)));
        assert_eq!(reg.ids(), ["always"]);
        assert!(!reg.run("always", &RunParams::default()).unwrap().passed);
        assert!(reg.run("missing", &RunParams::default()).is_none());
    }

    #[test]
    fn reports_are_reproducible() {
        let reg = ClaimRegistry::builtin();
        let params = RunParams {
            samples: 300,
            seed: 99,
            ..RunParams::default()
        };
        let a = serde_json::to_string(&reg.run_all(&params)).unwrap();
        let b = serde_json::to_string(&reg.run_all(&params)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn every_builtin_self_test_detects() {
        let reg = ClaimRegistry::builtin();
        let params = RunParams {
            samples: 200,
            ..RunParams::default()
        };
        for claim in reg.iter() {
            let outcome = claim.self_test(&params);
            assert!(
                outcome.detected,
                "{} did not detect the perturbation",
                claim.id()
            );
            assert!(outcome.report.max_deviation >= 0.5 * SELF_TEST_PERTURBATION);
        }
    }

    #[test]
    fn passed_iff_within_tolerance() {
        let reg = ClaimRegistry::builtin();
        let params = RunParams {
            samples: 100,
            ..RunParams::default()
        };
        for r in reg.run_all(&params) {
            assert_eq!(r.passed, r.max_deviation <= r.tolerance);
        }
    }
}
