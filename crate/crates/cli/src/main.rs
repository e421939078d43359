//! Command-line front end for the determinant-character analyzer.
//!
//! Exit codes: 0 success, 1 usage error (bad flags, unreadable or malformed
//! input), 2 validation error (input parsed but is not a well-posed problem).

mod problem_file;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use cantriv::analyzer::{self, Problem};
use cantriv::Error;

use problem_file::ProblemFile;
use report::{ReportFile, SweepFile, SweepRow};

#[derive(Debug)]
pub enum CliError {
    /// Exit code 1: the invocation or input file is malformed.
    Usage(String),
    /// Exit code 2: the input parsed but fails mathematical validation.
    Validation(String),
}

impl CliError {
    pub fn from_core(e: Error) -> CliError {
        match e {
            Error::ZeroVector | Error::InvalidParameter(_) | Error::SizeMismatch(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(name = "cantriv", version, about = "Determinant-character analyzer for GL(n)-homogeneous spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze a problem description from a JSON file
    Analyze {
        /// Path to the problem file
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Analyze a member of a built-in family
    Builtin {
        #[command(subcommand)]
        family: BuiltinCmd,
    },
    /// Analyze a built-in family over a parameter range
    Sweep {
        #[command(subcommand)]
        family: SweepCmd,
    },
}

#[derive(Subcommand)]
enum BuiltinCmd {
    /// Stabilizer of e1^e3 + e2^e4 in wedge2 C^n (n >= 5)
    Secant {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Stabilizer of e1^k in sym^k C^2 (k >= 1)
    Rnc {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SweepCmd {
    /// Sweep the wedge2 family over n = from..=to
    Secant {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t = SweepFormat::Table)]
        format: SweepFormat,
    },
    /// Sweep the sym^k family over k = from..=to
    Rnc {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t = SweepFormat::Table)]
        format: SweepFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFormat {
    Table,
    Json,
}

fn main() {
    process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version print to stdout and are a success;
            // genuine parse failures go to stderr with a usage exit.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    match cli.cmd {
        Cmd::Analyze { file, format } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", file.display())))?;
            let parsed: ProblemFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("invalid problem file: {e}")))?;
            let problem = problem_file::build_problem(parsed)?;
            render(&problem, format)
        }
        Cmd::Builtin { family } => {
            let (problem, format) = match family {
                BuiltinCmd::Secant { n, format } => {
                    (analyzer::builtin_secant(n).map_err(CliError::from_core)?, format)
                }
                BuiltinCmd::Rnc { k, format } => {
                    (analyzer::builtin_rnc(k).map_err(CliError::from_core)?, format)
                }
            };
            render(&problem, format)
        }
        Cmd::Sweep { family } => match family {
            SweepCmd::Secant { from, to, format } => sweep("secant", from, to, format, |n| {
                analyzer::builtin_secant(n as usize)
            }),
            SweepCmd::Rnc { from, to, format } => sweep("rnc", from, to, format, |k| {
                analyzer::builtin_rnc(k as u32)
            }),
        },
    }
}

fn render(problem: &Problem, format: Format) -> Result<String, CliError> {
    let report = analyzer::analyze(problem).map_err(CliError::from_core)?;
    let file = ReportFile::build(problem.provenance(), &report);
    Ok(match format {
        Format::Json => file.to_json(),
        Format::Text => file.to_text(),
    })
}

fn sweep(
    family: &str,
    from: u64,
    to: u64,
    format: SweepFormat,
    build: impl Fn(u64) -> cantriv::Result<Problem> + Sync,
) -> Result<String, CliError> {
    if from > to {
        return Err(CliError::Usage(format!(
            "empty sweep range: --from {from} exceeds --to {to}"
        )));
    }
    let params: Vec<u64> = (from..=to).collect();
    let rows = params
        .par_iter()
        .map(|&param| {
            let problem = build(param).map_err(CliError::from_core)?;
            let report = analyzer::analyze(&problem).map_err(CliError::from_core)?;
            Ok(SweepRow::build(param, &report))
        })
        .collect::<Result<Vec<SweepRow>, CliError>>()?;
    let file = SweepFile {
        family: family.to_string(),
        rows,
    };
    Ok(match format {
        SweepFormat::Table => file.to_table(),
        SweepFormat::Json => file.to_json(),
    })
}
