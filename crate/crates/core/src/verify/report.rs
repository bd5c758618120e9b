use std::fmt;

use serde::Serialize;

/// Outcome of one verification run. `passed` holds iff
/// `max_deviation <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub samples: usize,
    pub seed: u64,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub details: String,
}

impl VerificationReport {
    pub(crate) fn from_checks(
        claim_id: &str,
        statement: &str,
        samples: usize,
        seed: u64,
        tolerance: f64,
        checks: &Checks,
    ) -> Self {
        let max_deviation = checks.max();
        let details = if checks.is_empty() {
            format!("{statement}; vacuous: no samples were drawn")
        } else {
            format!("{statement}; {checks}")
        };
        Self {
            claim_id: claim_id.to_owned(),
            samples,
            seed,
            max_deviation,
            tolerance,
            passed: max_deviation <= tolerance,
            details,
        }
    }
}

/// Named running maxima of absolute deviations.
#[derive(Debug, Default, Clone)]
pub(crate) struct Checks {
    entries: Vec<(&'static str, f64, usize)>,
}

impl Checks {
    pub fn record(&mut self, name: &'static str, deviation: f64) {
        // NaN must fail the run, so it is kept as +inf.
        let deviation = if deviation.is_nan() {
            f64::INFINITY
        } else {
            deviation
        };
        match self.entries.iter_mut().find(|(n, _, _)| *n == name) {
            Some(entry) => {
                entry.1 = entry.1.max(deviation);
                entry.2 += 1;
            }
            None => self.entries.push((name, deviation, 1)),
        }
    }

    pub fn max(&self) -> f64 {
        self.entries.iter().map(|e| e.1).fold(0.0, f64::max)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Checks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, dev, count)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}: max {dev:.3e} over {count}")?;
        }
        Ok(())
    }
}
