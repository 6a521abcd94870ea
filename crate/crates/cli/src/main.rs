//! `tmatch`: construct families, measure their invariants, and run the
//! verification checks from the command line.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 usage error, 3 search
//! budget exhausted, 4 violation found, 5 requested grid too large.

mod construct;
mod kneser;
mod measure;
mod parse;
mod verify;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use tmatch::setcore::Format;
use tmatch::{Error, SearchBudget};

#[derive(Parser)]
#[command(name = "tmatch", version, about = "Exact t-matching combinatorics: constructions, invariants and checks")]
struct Cli {
    /// Worker threads used inside library calls.
    #[arg(long, global = true, env = "TMATCH_THREADS", default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one of the named families to a file.
    Construct(construct::ConstructArgs),
    /// Compute an invariant of a family file.
    Measure(measure::MeasureArgs),
    /// Run a verification check over a parameter grid.
    Verify(verify::VerifyArgs),
    /// Generalized Kneser graph tools.
    Kneser(kneser::KneserArgs),
}

/// Limits for exact searches; unlimited unless given.
#[derive(Args, Clone, Copy, Debug)]
pub struct BudgetArgs {
    /// Maximum number of search nodes.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Maximum wall time per search, in seconds.
    #[arg(long)]
    max_seconds: Option<f64>,
}

impl BudgetArgs {
    pub fn budget(&self) -> tmatch::Result<SearchBudget> {
        match (self.max_nodes, self.max_seconds) {
            (None, None) => Ok(SearchBudget::unlimited()),
            (nodes, secs) => SearchBudget::new(nodes.unwrap_or(u64::MAX), secs.unwrap_or(f64::INFINITY)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FormatArg {
    Json,
    Lines,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Lines => Format::Lines,
        }
    }
}

/// Writes to `path`, or stdout when it is `None` or `-`.
pub fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

pub fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON value serializes");
    s.push('\n');
    s
}

pub const EXIT_IO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_VIOLATION: u8 = 4;
pub const EXIT_INFEASIBLE: u8 = 5;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::InvalidParameters(_) | Error::IdenticalSets(_) | Error::NotTIntersecting { .. }) => EXIT_USAGE,
        Some(Error::Parse { .. } | Error::InvariantViolation { .. }) => EXIT_IO,
        Some(Error::BudgetExhausted(_)) => EXIT_BUDGET,
        Some(Error::ConstructionInfeasible(_) | Error::DecompositionInvalid { .. }) => EXIT_VIOLATION,
        Some(Error::Infeasible { .. }) => EXIT_INFEASIBLE,
        None => EXIT_IO,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build_global() {
        eprintln!("error: cannot configure thread pool: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    let result = match cli.command {
        Command::Construct(a) => construct::run(&a),
        Command::Measure(a) => measure::run(&a),
        Command::Verify(a) => verify::run(&a),
        Command::Kneser(a) => kneser::run(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = exit_code(&e);
            eprintln!("error: {e:#}");
            if code == EXIT_USAGE {
                eprintln!("\nRun with --help for usage.");
            }
            if let Some(Error::Infeasible { instances, cap }) = e.downcast_ref::<Error>() {
                eprintln!("estimate: {instances} instances; raise --max-instances above {cap} to run anyway");
            }
            ExitCode::from(code)
        }
    }
}
