use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sec3_core::porteous::Method;
use sec3_core::MIN_DEGREE;

pub const DEFAULT_VERIFY_RANGE: (u32, u32) = (8, 40);

#[derive(Debug, Parser)]
#[command(
    name = "sec3",
    version,
    about = "Degree of the third secant variety of a genus-2 curve of degree d >= 8"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the degree for a single d.
    Degree(CommonArgs),
    /// Tabulate degrees over a range of d.
    Table(CommonArgs),
    /// Run the full verification suite over a range of d.
    Verify(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Curve degree.
    #[arg(long = "d")]
    pub d: Option<u32>,
    #[arg(long)]
    pub d_min: Option<u32>,
    #[arg(long)]
    pub d_max: Option<u32>,
    #[arg(long, value_enum, default_value_t = MethodChoice::Cofactor)]
    pub method: MethodChoice,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Print intermediate classes.
    #[arg(long, short)]
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Cofactor,
    Recurrence,
    ClosedForm,
    All,
}

impl MethodChoice {
    /// The method whose value is reported as "the" degree.
    pub fn primary(self) -> Method {
        match self {
            MethodChoice::Cofactor | MethodChoice::All => Method::Cofactor,
            MethodChoice::Recurrence => Method::Recurrence,
            MethodChoice::ClosedForm => Method::ClosedForm,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MethodChoice::All => "all",
            m => m.primary().as_str(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Degree,
    Table,
    Verify,
}

/// Validated command-line configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: CommandKind,
    pub d: Option<u32>,
    pub d_min: Option<u32>,
    pub d_max: Option<u32>,
    pub method: MethodChoice,
    pub format: Format,
    pub verbose: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn check_min(name: &str, d: u32) -> Result<(), UsageError> {
    if d < MIN_DEGREE {
        Err(UsageError(format!(
            "{name} = {d} is not supported: the secant-degree formula is derived for curves of degree d >= {MIN_DEGREE}"
        )))
    } else {
        Ok(())
    }
}

impl CliConfig {
    pub fn from_command(command: Command) -> Result<Self, UsageError> {
        let (kind, args) = match command {
            Command::Degree(a) => (CommandKind::Degree, a),
            Command::Table(a) => (CommandKind::Table, a),
            Command::Verify(a) => (CommandKind::Verify, a),
        };
        let config = Self {
            command: kind,
            d: args.d,
            d_min: args.d_min,
            d_max: args.d_max,
            method: args.method,
            format: args.format,
            verbose: args.verbose,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), UsageError> {
        match self.command {
            CommandKind::Degree => {
                let d = self
                    .d
                    .ok_or_else(|| UsageError("degree requires --d".into()))?;
                check_min("d", d)
            }
            CommandKind::Table | CommandKind::Verify => {
                if self.d.is_some() {
                    return Err(UsageError("use --d-min/--d-max to select a range".into()));
                }
                if self.command == CommandKind::Table
                    && (self.d_min.is_none() || self.d_max.is_none())
                {
                    return Err(UsageError("table requires --d-min and --d-max".into()));
                }
                let (lo, hi) = self.range();
                check_min("d-min", lo)?;
                check_min("d-max", hi)?;
                if lo > hi {
                    return Err(UsageError(format!(
                        "empty range: d-min = {lo} > d-max = {hi}"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Inclusive `d` range; for `verify`, unspecified ends take the default.
    pub fn range(&self) -> (u32, u32) {
        (
            self.d_min.unwrap_or(DEFAULT_VERIFY_RANGE.0),
            self.d_max.unwrap_or(DEFAULT_VERIFY_RANGE.1),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<CliConfig, UsageError> {
        let cli = Cli::try_parse_from(std::iter::once("sec3").chain(args.iter().copied())).unwrap();
        CliConfig::from_command(cli.command)
    }

    #[test]
    fn degree_needs_d() {
        assert!(parse(&["degree"]).is_err());
        let err = parse(&["degree", "--d", "7"]).unwrap_err();
        assert!(err.0.contains("d >= 8"), "{err}");
        let c = parse(&[
            "degree",
            "--d",
            "8",
            "--format",
            "json",
            "--method",
            "closed-form",
        ])
        .unwrap();
        assert_eq!(c.d, Some(8));
        assert_eq!(c.format, Format::Json);
        assert_eq!(c.method, MethodChoice::ClosedForm);
    }

    #[test]
    fn table_range() {
        assert!(parse(&["table", "--d-min", "10", "--d-max", "9"]).is_err());
        assert!(parse(&["table", "--d-min", "8"]).is_err());
        assert!(parse(&["table", "--d-min", "7", "--d-max", "9"]).is_err());
        let c = parse(&["table", "--d-min", "8", "--d-max", "8"]).unwrap();
        assert_eq!(c.range(), (8, 8));
    }

    #[test]
    fn verify_defaults() {
        let c = parse(&["verify"]).unwrap();
        assert_eq!(c.range(), (8, 40));
        let c = parse(&["verify", "--d-max", "60"]).unwrap();
        assert_eq!(c.range(), (8, 60));
        assert!(parse(&["verify", "--d-max", "7"]).is_err());
    }
}
