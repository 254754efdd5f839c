//! Command-line front end: `sec3 degree`, `sec3 table` and `sec3 verify`.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification or agreement failure.

pub mod config;
pub mod report;
pub mod verify;

use clap::Parser;
use rayon::prelude::*;
use sec3_core::DegreeReport;

pub use config::{Cli, CliConfig, CommandKind, Format, MethodChoice, UsageError};
pub use report::{DegreeOutput, TableRow};
pub use verify::{VerifyOptions, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn failure(stdout: String, stderr: String) -> Self {
        Self {
            code: EXIT_FAILURE,
            stdout,
            stderr,
        }
    }
}

pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return Outcome::ok(e.to_string()),
        Err(e) => {
            return Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: e.to_string(),
            }
        }
    };
    match CliConfig::from_command(cli.command) {
        Ok(config) => run(&config, &VerifyOptions::default()),
        Err(e) => Outcome::usage(e),
    }
}

pub fn run(config: &CliConfig, options: &VerifyOptions) -> Outcome {
    if let Err(e) = config.validate() {
        return Outcome::usage(e);
    }
    match config.command {
        CommandKind::Degree => run_degree(config),
        CommandKind::Table => run_table(config),
        CommandKind::Verify => run_verify(config, options),
    }
}

pub fn run_degree(config: &CliConfig) -> Outcome {
    let Some(d) = config.d else {
        return Outcome::usage("degree requires --d");
    };
    let report = match DegreeReport::compute(d) {
        Ok(r) => r,
        Err(e) => return Outcome::failure(String::new(), format!("error: {e}\n")),
    };
    let mut output = DegreeOutput::new(&report, config.method);
    if config.verbose {
        match report::intermediates(d, config.method) {
            Ok(stages) => output.intermediates = Some(stages),
            Err(e) => return Outcome::failure(String::new(), format!("error: {e}\n")),
        }
    }
    let stdout = output.render(config.format);
    if report.methods_agree {
        Outcome::ok(stdout)
    } else {
        Outcome::failure(
            stdout,
            format!("error: methods disagree for d = {d}: {report:?}\n"),
        )
    }
}

pub fn run_table(config: &CliConfig) -> Outcome {
    let (lo, hi) = config.range();
    let reports: Result<Vec<_>, _> = (lo..=hi)
        .into_par_iter()
        .map(DegreeReport::compute)
        .collect();
    let reports = match reports {
        Ok(r) => r,
        Err(e) => return Outcome::failure(String::new(), format!("error: {e}\n")),
    };
    let rows: Vec<TableRow> = reports.iter().map(TableRow::from).collect();
    let stdout = report::render_table(&rows, config.format);
    match rows.iter().find(|r| !r.matches) {
        None => Outcome::ok(stdout),
        Some(r) => Outcome::failure(stdout, format!("error: methods disagree for d = {}\n", r.d)),
    }
}

pub fn run_verify(config: &CliConfig, options: &VerifyOptions) -> Outcome {
    let (lo, hi) = config.range();
    let report = verify::run_checks(lo, hi, options);
    let stdout = report.render(config.format);
    if report.passed {
        Outcome::ok(stdout)
    } else {
        let first = report
            .checks
            .iter()
            .find(|c| !c.passed)
            .expect("a check failed");
        Outcome::failure(stdout, format!("error: check failed: {}\n", first.name))
    }
}
