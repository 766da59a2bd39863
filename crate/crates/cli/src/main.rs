//! Batch front end for the verification suites: runs a named suite, prints
//! the JSON report on stdout and a human-readable table on stderr.
//!
//! Exit status: 0 when every check passes, 1 when any check fails (or the
//! engine reports an evaluation error), 2 on usage errors.

use clap::{Parser, ValueEnum};
use std::process::ExitCode;

use weylgerbe::{run_suite, Error, Suite, SuiteConfig};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    #[value(name = "appendix-lemmas")]
    AppendixLemmas,
    #[value(name = "cocycles")]
    Cocycles,
    #[value(name = "connective-data")]
    ConnectiveData,
    #[value(name = "root-space")]
    RootSpace,
    #[value(name = "holonomy")]
    Holonomy,
    #[value(name = "all")]
    All,
}

impl From<SuiteArg> for Suite {
    fn from(arg: SuiteArg) -> Suite {
        match arg {
            SuiteArg::AppendixLemmas => Suite::AppendixLemmas,
            SuiteArg::Cocycles => Suite::Cocycles,
            SuiteArg::ConnectiveData => Suite::ConnectiveData,
            SuiteArg::RootSpace => Suite::RootSpace,
            SuiteArg::Holonomy => Suite::Holonomy,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
}

/// Numerical verification suites for projection-frame trace forms,
/// branch-cut cocycles, connective data and sphere holonomy.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Cli {
    /// Suite to run.
    #[arg(value_enum)]
    suite: SuiteArg,

    /// Matrix rank (2..=8).
    #[arg(long, default_value_t = 2)]
    n: usize,

    /// Seed for all sampled checks.
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Residual tolerance for inexact checks. Integer identities always
    /// use 0; finite-difference and quadrature checks apply documented
    /// floors (1e-6 and 1e-8).
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,

    /// Gauss-Legendre order of the sphere quadrature.
    #[arg(long = "mesh-order", default_value_t = 32)]
    mesh_order: usize,

    /// Report format emitted on stdout.
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    report: ReportFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = SuiteConfig {
        n: cli.n,
        seed: cli.seed,
        tol: cli.tol,
        mesh_order: cli.mesh_order,
    };
    match run_suite(cli.suite.into(), &cfg) {
        Ok(report) => {
            let ReportFormat::Json = cli.report;
            match serde_json::to_string(&report) {
                Ok(json) => println!("{json}"),
                Err(e) => {
                    eprintln!("verify: failed to serialise report: {e}");
                    return ExitCode::from(1);
                }
            }
            eprint!("{}", report.render_table());
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::RankOutOfRange { n }) => {
            eprintln!("verify: rank n = {n} out of range (2..=8)");
            ExitCode::from(2)
        }
        Err(Error::InvalidValue(msg)) => {
            eprintln!("verify: invalid argument: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("verify: {e}");
            ExitCode::from(1)
        }
    }
}
