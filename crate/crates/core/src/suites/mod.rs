//! Named verification suites bundling the identity checks into reports.
//!
//! Every suite is deterministic given (n, seed, tol, mesh_order): sampling
//! flows through a single seeded generator handed to the checks in
//! declaration order, and reports list checks in that same fixed order.
//! Exactness-style checks (integer cocycles) use tolerance 0; checks
//! limited by finite differences or assembly rounding apply a documented
//! floor to the configured tolerance.

mod appendix;
mod cocycles;
mod connective;
mod holonomy;
mod rootspace;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::report::SuiteReport;

/// The available verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    AppendixLemmas,
    Cocycles,
    ConnectiveData,
    RootSpace,
    Holonomy,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::AppendixLemmas => "appendix-lemmas",
            Suite::Cocycles => "cocycles",
            Suite::ConnectiveData => "connective-data",
            Suite::RootSpace => "root-space",
            Suite::Holonomy => "holonomy",
            Suite::All => "all",
        }
    }

    pub fn all_names() -> [&'static str; 6] {
        [
            "appendix-lemmas",
            "cocycles",
            "connective-data",
            "root-space",
            "holonomy",
            "all",
        ]
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "appendix-lemmas" => Ok(Suite::AppendixLemmas),
            "cocycles" => Ok(Suite::Cocycles),
            "connective-data" => Ok(Suite::ConnectiveData),
            "root-space" => Ok(Suite::RootSpace),
            "holonomy" => Ok(Suite::Holonomy),
            "all" => Ok(Suite::All),
            other => Err(Error::UnknownSuite(other.to_string())),
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Configuration shared by all suites.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    /// Matrix rank, 2..=8.
    pub n: usize,
    /// Seed of the generator every sampled check draws from.
    pub seed: u64,
    /// Residual tolerance for inexact checks.
    pub tol: f64,
    /// Gauss-Legendre order of the sphere quadrature.
    pub mesh_order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n: 2,
            seed: 1,
            tol: crate::tol::TOL_IDENTITY,
            mesh_order: 32,
        }
    }
}

/// Runs a suite and assembles its report. Exit-status semantics are the
/// caller's concern; the report records each check's outcome.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if !(2..=8).contains(&cfg.n) {
        return Err(Error::RankOutOfRange { n: cfg.n });
    }
    if cfg.mesh_order < 2 {
        return Err(Error::InvalidValue("mesh order must be at least 2".into()));
    }
    if !(cfg.tol.is_finite() && cfg.tol >= 0.0) {
        return Err(Error::InvalidValue("tolerance must be non-negative".into()));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let checks = match suite {
        Suite::AppendixLemmas => appendix::checks(cfg, &mut rng)?,
        Suite::Cocycles => cocycles::checks(cfg, &mut rng)?,
        Suite::ConnectiveData => connective::checks(cfg, &mut rng)?,
        Suite::RootSpace => rootspace::checks(cfg, &mut rng)?,
        Suite::Holonomy => holonomy::checks(cfg, &mut rng)?,
        Suite::All => {
            let mut all = appendix::checks(cfg, &mut rng)?;
            all.extend(cocycles::checks(cfg, &mut rng)?);
            all.extend(connective::checks(cfg, &mut rng)?);
            all.extend(rootspace::checks(cfg, &mut rng)?);
            all.extend(holonomy::checks(cfg, &mut rng)?);
            all
        }
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        n: cfg.n,
        seed: cfg.seed,
        checks,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::all_names() {
            let suite: Suite = name.parse().unwrap();
            assert_eq!(suite.name(), name);
        }
        assert!(matches!(
            "bogus".parse::<Suite>(),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn rank_is_validated() {
        let cfg = SuiteConfig {
            n: 9,
            ..Default::default()
        };
        assert!(matches!(
            run_suite(Suite::Cocycles, &cfg),
            Err(Error::RankOutOfRange { n: 9 })
        ));
    }

    #[test]
    fn all_suites_pass_at_default_config() {
        for n in [2usize, 3] {
            let cfg = SuiteConfig {
                n,
                mesh_order: 16,
                ..Default::default()
            };
            let report = run_suite(Suite::All, &cfg).unwrap();
            assert!(
                report.all_passed(),
                "failures at n = {n}:\n{}",
                report.render_table()
            );
            assert!(report.checks.len() >= 20);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = SuiteConfig {
            n: 3,
            seed: 42,
            mesh_order: 8,
            ..Default::default()
        };
        let a = run_suite(Suite::All, &cfg).unwrap();
        let b = run_suite(Suite::All, &cfg).unwrap();
        assert_eq!(a.checks.len(), b.checks.len());
        for (ca, cb) in a.checks.iter().zip(&b.checks) {
            assert_eq!(ca.id, cb.id);
            assert_eq!(ca.status, cb.status);
            assert_eq!(ca.value, cb.value);
            assert_eq!(ca.tolerance, cb.tolerance);
        }
    }
}
