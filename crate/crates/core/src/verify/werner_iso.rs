use super::report::{Checks, VerificationReport};
use super::{Claim, RunParams};
use crate::coherence::l1_coherence;
use crate::linalg::DensityMatrix;
use crate::mub::{build_amub, pauli_mubs, MubSet};
use crate::states::{isotropic, werner};

pub const WERNER_ISO_ID: &str = "werner-iso";
const WERNER_ISO_STATEMENT: &str =
    "Werner states have l1 coherence |4p/3 - 1| and isotropic states \
     |(4F-1)/3| in each of gamma1, gamma2, gamma3";

pub fn verify_werner_isotropic(grid_points: usize, tol: f64) -> VerificationReport {
    WernerIsotropic.run(&RunParams {
        grid_points,
        tolerance: tol,
        ..RunParams::default()
    })
}

fn check_family(
    gamma: &MubSet,
    rho: &DensityMatrix,
    expected: f64,
    name: &'static str,
    checks: &mut Checks,
) {
    let values: Vec<f64> = gamma
        .bases()
        .iter()
        .map(|b| l1_coherence(rho, b).expect("dimension 4"))
        .collect();
    for &v in &values {
        checks.record(name, (v - expected).abs());
    }
    let hi = values.iter().copied().fold(f64::MIN, f64::max);
    let lo = values.iter().copied().fold(f64::MAX, f64::min);
    checks.record("spread over gamma1..gamma3", hi - lo);
}

pub struct WernerIsotropic;

impl Claim for WernerIsotropic {
    fn id(&self) -> &str {
        WERNER_ISO_ID
    }

    fn statement(&self) -> &str {
        WERNER_ISO_STATEMENT
    }

    fn run(&self, params: &RunParams) -> VerificationReport {
        let gamma = build_amub(&pauli_mubs());
        let mut checks = Checks::default();
        let n = params.grid_points;
        for k in 0..n {
            let s = if n == 1 {
                0.0
            } else {
                k as f64 / (n - 1) as f64
            };
            let w = werner(s).expect("grid inside [0, 1]");
            let expected = (4.0 * s / 3.0 - 1.0).abs() + params.perturbation;
            check_family(&gamma, &w, expected, "Werner vs |4p/3 - 1|", &mut checks);
            let iso = isotropic(s).expect("grid inside [0, 1]");
            let expected = ((4.0 * s - 1.0) / 3.0).abs() + params.perturbation;
            check_family(
                &gamma,
                &iso,
                expected,
                "isotropic vs |(4F-1)/3|",
                &mut checks,
            );
        }
        VerificationReport::from_checks(
            WERNER_ISO_ID,
            WERNER_ISO_STATEMENT,
            n,
            params.seed,
            params.tolerance,
            &checks,
        )
    }
}
