//! Command-line front end for `circforge-core`: searches, pipelines,
//! verification of code files, and bounds.

pub mod codefile;
pub mod distance;
pub mod report;

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::run_command;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] circforge_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    /// A check ran to completion and came out false.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn parse(line: usize, message: String) -> CliError {
        CliError::Parse { line, message }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_defect() => 1,
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "circforge", version, about = "Quasi-cyclic to cyclic code constructions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SearchKind {
    Dcsd,
    Fcsd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PipelineArg {
    Ell2,
    P1mod4,
    P3mod4,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Primes m <= limit such that q is primitive modulo m.
    Artin {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        limit: u64,
    },
    /// Exhaustive search for self-dual double (dcsd) or four (fcsd) circulants.
    Search {
        kind: SearchKind,
        #[arg(long)]
        q: u64,
        /// Co-index (circulant order).
        #[arg(long)]
        m: usize,
        /// Candidate and enumeration budget.
        #[arg(long)]
        budget: Option<u128>,
        /// Directory for the code files found.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a quasi-cyclic to cyclic pipeline and print its report.
    Pipeline {
        kind: PipelineArg,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        /// Coefficients of a(x), constant term first, as comma-separated encodings.
        #[arg(long)]
        a: String,
        /// Coefficients of b(x) (p3mod4 only).
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        budget: Option<u128>,
        /// Write the output cyclic code here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate predicates on a code file.
    Verify {
        file: PathBuf,
        /// cyclic, qc:<l>, selfdual or distance. Repeatable.
        #[arg(long, required = true)]
        predicate: Vec<String>,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Gilbert-Varshamov targets for rate 1/ell.
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u64,
    },
    /// Sample random quasi-cyclic codes and check phi_B against them.
    SampleQc {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 10)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u128>,
    },
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match run_command(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
