//! Command-line front end for `torus2dd`.
//!
//! Exit codes: 0 success or valid certificate, 1 invalid certificate (or a
//! table row that disagrees with its formula), 2 usage or format error,
//! 3 solver budget exhausted before optimality was proven.

pub mod certificate;
mod commands;

use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use torus2dd::constructions::Family;
use torus2dd::solver::Method;

pub use certificate::Certificate;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed certificate: {0}")]
    Certificate(String),
    #[error(transparent)]
    Core(#[from] torus2dd::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Output(#[from] io::Error),
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Invalid,
    BudgetExhausted,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Invalid => 1,
            Outcome::BudgetExhausted => 3,
        }
    }
}

pub const USAGE_ERROR: i32 = 2;

/// Output sink; `Send` so commands can run inside a sized thread pool.
pub type Out = dyn Write + Send;

#[derive(Debug, Parser)]
#[command(name = "torus2dd", version, about = "Disjunctive domination numbers of torus grid graphs C_m x C_n")]
pub struct Cli {
    /// Worker threads for the solvers (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the domination number exactly.
    Solve {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        /// Wall-clock limit such as `90s` or `30m`.
        #[arg(long, value_parser = humantime::parse_duration)]
        time_limit: Option<Duration>,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Write the optimal set as a certificate.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check that a certificate holds a 2DD-set.
    Verify { certificate: PathBuf },
    /// Build an explicit 2DD-set.
    Construct {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Rows; implied by families with a fixed row count.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Certificate path; the certificate goes to stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Column sequence diagnostics for a certificate.
    Analyze { certificate: PathBuf },
    /// Known lower and upper bounds, with their sources.
    Bounds {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Compare closed-form values against the solver.
    Table {
        /// 2 (three rows), 3 (four rows) or 4 (eight rows).
        #[arg(long)]
        theorem: u8,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        /// Per-row wall-clock limit.
        #[arg(long, value_parser = humantime::parse_duration)]
        time_limit: Option<Duration>,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

/// Runs a parsed command, writing results to `out` and notes to `err`.
pub fn run(cli: &Cli, out: &mut Out, err: &mut Out) -> Result<Outcome, CliError> {
    match cli.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.into())
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| commands::dispatch(&cli.command, out, err)),
        None => commands::dispatch(&cli.command, out, err),
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { USAGE_ERROR } else { 0 };
        }
    };
    match run(&cli, &mut io::stdout(), &mut io::stderr()) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            eprintln!("error: {e}");
            USAGE_ERROR
        }
    }
}
