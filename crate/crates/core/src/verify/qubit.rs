use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::report::{Checks, VerificationReport};
use super::sampling::{bloch_ball, bloch_sphere};
use super::{Claim, RunParams};
use crate::coherence::{l1_coherence, qubit_closed_form, PauliBasis};
use crate::mub::{pauli_mubs, MubSet};
use crate::states::{bloch_state, BlochVector};

pub const QUBIT_ID: &str = "qubit";
const QUBIT_STATEMENT: &str = "qubit l1 coherences in the Pauli eigenbases are sqrt(x^2+y^2), \
     sqrt(y^2+z^2), sqrt(x^2+z^2); their squares sum to 2|r|^2 <= 2 with equality on pure states";

/// Checks the closed forms against the generic route, and the bound on the
/// sum of squares, for `samples` uniform Bloch-ball points plus `samples / 10`
/// pure states.
pub fn verify_qubit_bound(samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let params = RunParams {
        samples,
        seed,
        tolerance: tol,
        ..RunParams::default()
    };
    QubitBound.run(&params)
}

/// Only the equality case: every sample lies on the unit sphere.
pub fn verify_qubit_pure(samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alpha = pauli_mubs();
    let mut checks = Checks::default();
    for _ in 0..samples {
        sweep_point(&alpha, bloch_sphere(&mut rng), 0.0, &mut checks, true);
    }
    VerificationReport::from_checks(QUBIT_ID, QUBIT_STATEMENT, samples, seed, tol, &checks)
}

fn sweep_point(alpha: &MubSet, v: BlochVector, perturbation: f64, checks: &mut Checks, pure: bool) {
    let rho = bloch_state(v);
    let mut sum_sq = 0.0;
    for which in PauliBasis::ALL {
        let mut closed = qubit_closed_form(v, which);
        if which == PauliBasis::Alpha1 {
            closed += perturbation;
        }
        let generic =
            l1_coherence(&rho, &alpha.bases()[which.index()]).expect("matching dimension");
        checks.record("closed form vs conjugation", (closed - generic).abs());
        sum_sq += closed * closed;
    }
    checks.record(
        "sum of squares vs 2|r|^2",
        (sum_sq - 2.0 * v.norm_sq()).abs(),
    );
    checks.record("excess over 2", (sum_sq - 2.0).max(0.0));
    if pure {
        checks.record("pure-state equality", (sum_sq - 2.0).abs());
    }
}

pub struct QubitBound;

impl Claim for QubitBound {
    fn id(&self) -> &str {
        QUBIT_ID
    }

    fn statement(&self) -> &str {
        QUBIT_STATEMENT
    }

    fn run(&self, params: &RunParams) -> VerificationReport {
        let alpha = pauli_mubs();
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        let mut checks = Checks::default();
        for _ in 0..params.samples {
            sweep_point(
                &alpha,
                bloch_ball(&mut rng),
                params.perturbation,
                &mut checks,
                false,
            );
        }
        rng.set_stream(1);
        for _ in 0..params.samples / 10 {
            sweep_point(
                &alpha,
                bloch_sphere(&mut rng),
                params.perturbation,
                &mut checks,
                true,
            );
        }
        VerificationReport::from_checks(
            QUBIT_ID,
            QUBIT_STATEMENT,
            params.samples,
            params.seed,
            params.tolerance,
            &checks,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let r = verify_qubit_bound(10_000, 42, 1e-12);
        assert!(r.passed, "{r:?}");
        assert_eq!(r.samples, 10_000);
    }

    #[test]
    fn pure_sampling_hits_equality() {
        let r = verify_qubit_pure(1000, 5, 1e-12);
        assert!(r.passed, "{r:?}");
        assert!(r.details.contains("pure-state equality"));
    }

    #[test]
    fn zero_samples_is_vacuous() {
        let r = verify_qubit_bound(0, 1, 1e-12);
        assert!(r.passed);
        assert_eq!(r.samples, 0);
        assert!(r.details.contains("vacuous"));
    }

    #[test]
    fn perturbation_is_detected() {
        let outcome = QubitBound.self_test(&RunParams {
            samples: 100,
            ..RunParams::default()
        });
        assert!(outcome.detected, "{:?}", outcome.report);
    }
}
