//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 unreadable or disconnected input,
//! 3 search budget exhausted, 4 anomaly or failed verification.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use metdim_core::generators::FamilySpec;
use metdim_core::{Budget, Error};

use crate::formats::{read_graph, write_edge_list, write_json, FormatError};
use crate::report::{emit_report, run, Task};
use crate::sweep::{run_sweep, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;
pub const EXIT_ANOMALY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "metdim", version, about = "Metric dimension, domination number and related bounds of graphs")]
struct Cli {
    /// Print reports as single-line JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Search budget in milliseconds, converted to a fixed number of
    /// examined subsets so results do not depend on the machine.
    #[arg(long, global = true, value_name = "MS")]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a named graph as an edge list (JSON adjacency with --json).
    Gen {
        /// complete, complete_bipartite, path, cycle, star, kneser,
        /// subdivided_wheel or random_connected.
        family: String,
        params: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Exact metric dimension and the canonical basis.
    Dim { file: PathBuf },
    /// Exact domination number and a minimum dominating set.
    Dom { file: PathBuf },
    /// Resolving set built from a normalized minimum dominating set.
    Construct { file: PathBuf },
    /// Upper bounds on the metric dimension and lower bounds on domination.
    Bounds {
        file: PathBuf,
        /// Also compute the exact values and check them against the bounds.
        #[arg(long)]
        exact: bool,
    },
    /// Decide whether beta = n - gamma, structurally and exactly.
    Classify { file: PathBuf },
    /// Check the upper bound, the equality classification, the construction
    /// and every bound over a sweep of graphs.
    Verify {
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 7)]
        min_n: usize,
        #[arg(long, default_value_t = 18)]
        max_n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        exhaustive_upto: usize,
    },
}

fn budget(ms: Option<u64>) -> Budget {
    ms.map_or(Budget::UNLIMITED, Budget::from_millis)
}

fn core_exit_code(e: &Error) -> i32 {
    match e {
        Error::Timeout { .. } => EXIT_TIMEOUT,
        Error::Anomaly(_) => EXIT_ANOMALY,
        Error::InvalidParameter(_) | Error::SamplingFailed(_) | Error::OrderTooSmall { .. } => EXIT_USAGE,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (program name first) and runs the command, writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err((code, message)) => {
            let _ = writeln!(err, "metdim: {message}");
            code
        }
    }
}

type Failed = (i32, String);

fn from_core(e: Error) -> Failed {
    (core_exit_code(&e), e.to_string())
}

fn from_format(e: FormatError) -> Failed {
    (EXIT_INPUT, e.to_string())
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failed> {
    out.write_all(text.as_bytes()).map_err(|e| (EXIT_USAGE, format!("cannot write output: {e}")))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failed> {
    let budget = budget(cli.budget);
    let task = match cli.command {
        Command::Gen { family, params, seed, output } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let spec = FamilySpec::parse(&family, &params, seed).map_err(from_core)?;
            let g = spec.build().map_err(from_core)?;
            let text = if cli.json {
                let mut s = write_json(&g);
                s.push('\n');
                s
            } else {
                write_edge_list(&g, Some(&spec.to_string()))
            };
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| (EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?,
                None => emit(out, &text)?,
            }
            return Ok(EXIT_OK);
        }
        Command::Verify { count, min_n, max_n, p, seed, exhaustive_upto } => {
            let cfg = SweepConfig { exhaustive_upto, count, min_n, max_n, p, seed, budget };
            let outcome = run_sweep(&cfg).map_err(from_core)?;
            emit(out, &outcome.render(cli.json))?;
            return Ok(outcome.exit_code());
        }
        Command::Dim { file } => (file, Task::Dimension),
        Command::Dom { file } => (file, Task::Domination),
        Command::Construct { file } => (file, Task::Construct),
        Command::Bounds { file, exact } => (file, Task::Bounds { exact }),
        Command::Classify { file } => (file, Task::Classify),
    };
    let (file, task) = task;
    let g = read_graph(&file).map_err(from_format)?;
    let report = run(file.display().to_string(), &g, task, budget).map_err(from_core)?;
    emit(out, &emit_report(&report, cli.json))?;
    Ok(report.status.exit_code())
}
