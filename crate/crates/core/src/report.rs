//! Machine-readable reports emitted by the verification suites.

use serde::Serialize;

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

/// One verification check: a stable id, a self-describing statement of the
/// identity or bound it measures, the measured value as [re, im] and the
/// tolerance it was held to.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: CheckStatus,
    pub value: [f64; 2],
    pub tolerance: f64,
}

impl Check {
    /// Pass when the measured residual is within tolerance.
    pub fn residual(id: &str, anchor: &str, residual: f64, tolerance: f64) -> Self {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if residual.is_finite() && residual <= tolerance {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            value: [residual, 0.0],
            tolerance,
        }
    }

    /// Pass when `residual <= tolerance`, reporting an associated complex
    /// value instead of the residual itself.
    pub fn value_with_residual(
        id: &str,
        anchor: &str,
        value: [f64; 2],
        residual: f64,
        tolerance: f64,
    ) -> Self {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if residual.is_finite() && residual <= tolerance {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            value,
            tolerance,
        }
    }

    /// Pass when the measured value is at least the bound (stored in the
    /// tolerance slot).
    pub fn lower_bound(id: &str, anchor: &str, measured: f64, bound: f64) -> Self {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if measured.is_finite() && measured >= bound {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            value: [measured, 0.0],
            tolerance: bound,
        }
    }

    /// Informational entry: reported, never asserted.
    pub fn skip(id: &str, anchor: &str, value: [f64; 2]) -> Self {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: CheckStatus::Skip,
            value,
            tolerance: 0.0,
        }
    }
}

/// Report of one suite run. Serialises to the stable JSON schema
/// `{suite, n, seed, checks, wall_time_s}`.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub wall_time_s: f64,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .count()
    }

    /// Fixed-width table for human consumption.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} (n = {}, seed = {})\n",
            self.suite, self.n, self.seed
        ));
        out.push_str(&format!(
            "{:<44} {:>6} {:>26} {:>9}\n",
            "check", "status", "value (re, im)", "tol"
        ));
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skip => "skip",
            };
            out.push_str(&format!(
                "{:<44} {:>6} {:>12.4e} {:>12.4e} {:>9.1e}\n",
                c.id, status, c.value[0], c.value[1], c.tolerance
            ));
        }
        out.push_str(&format!(
            "{} checks, {} failed, {:.3}s\n",
            self.checks.len(),
            self.failures(),
            self.wall_time_s
        ));
        out
    }
}
