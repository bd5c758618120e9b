use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::report::{Checks, VerificationReport};
use super::sampling::{cube_params, physical_x_params};
use super::{Claim, RunParams};
use crate::coherence::{coefficients_in_basis, upper_triangle_l1, xstate_beta2_coefficients};
use crate::mub::{dim3_mubs, MubSet};
use crate::states::{x3_matrix, XStateParams, XVariant};

pub const XSTATE_ID: &str = "xstate";
const XSTATE_STATEMENT: &str = "for the three 3x3 X-type families the l1 coherence is the same in \
     beta2, beta3 and beta4; in beta2 it equals 2(|b12|+|b13|+|b23|)";

/// Which parameter draws a sweep uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XDraws {
    Physical,
    Unrestricted,
    Both,
}

#[derive(Debug, Clone)]
pub struct XStateEquality {
    pub variants: Vec<XVariant>,
    pub draws: XDraws,
    /// Forces `z = 0` (diagonal states).
    pub zero_coupling: bool,
}

impl Default for XStateEquality {
    fn default() -> Self {
        Self {
            variants: XVariant::ALL.to_vec(),
            draws: XDraws::Both,
            zero_coupling: false,
        }
    }
}

pub fn verify_xstate_equality(samples: usize, seed: u64, tol: f64) -> VerificationReport {
    XStateEquality::default().run(&RunParams {
        samples,
        seed,
        tolerance: tol,
        ..RunParams::default()
    })
}

impl XStateEquality {
    fn check(
        &self,
        beta: &MubSet,
        (x, y, z): (f64, f64, f64),
        perturbation: f64,
        checks: &mut Checks,
    ) {
        let z = if self.zero_coupling { 0.0 } else { z };
        for &variant in &self.variants {
            let m = x3_matrix(XStateParams { variant, x, y, z });
            let coeffs: Vec<_> = beta.bases()[1..]
                .iter()
                .map(|b| coefficients_in_basis(&m, b).expect("dimension 3"))
                .collect();
            let l1: Vec<f64> = coeffs.iter().map(|a| a.entries.off_diagonal_l1()).collect();
            let hi = l1.iter().copied().fold(f64::MIN, f64::max);
            let lo = l1.iter().copied().fold(f64::MAX, f64::min);
            checks.record("spread over beta2..beta4", hi - lo);

            if variant == XVariant::X {
                let structural = upper_triangle_l1(&coeffs[0].entries) + perturbation;
                checks.record("beta2 upper-triangle form", (structural - l1[0]).abs());
                let closed = xstate_beta2_coefficients(x, y, z);
                checks.record(
                    "beta2 closed-form coefficients",
                    closed.max_abs_diff(&coeffs[0].entries),
                );
            }
        }
    }
}

impl Claim for XStateEquality {
    fn id(&self) -> &str {
        XSTATE_ID
    }

    fn statement(&self) -> &str {
        XSTATE_STATEMENT
    }

    fn run(&self, params: &RunParams) -> VerificationReport {
        let beta = dim3_mubs();
        let mut checks = Checks::default();
        let mut physical = ChaCha8Rng::seed_from_u64(params.seed);
        let mut unrestricted = ChaCha8Rng::seed_from_u64(params.seed);
        unrestricted.set_stream(1);
        for _ in 0..params.samples {
            if matches!(self.draws, XDraws::Physical | XDraws::Both) {
                let p = physical_x_params(&mut physical);
                self.check(&beta, p, params.perturbation, &mut checks);
            }
            if matches!(self.draws, XDraws::Unrestricted | XDraws::Both) {
                let p = cube_params(&mut unrestricted);
                self.check(&beta, p, params.perturbation, &mut checks);
            }
        }
        VerificationReport::from_checks(
            XSTATE_ID,
            XSTATE_STATEMENT,
            params.samples,
            params.seed,
            params.tolerance,
            &checks,
        )
    }
}
