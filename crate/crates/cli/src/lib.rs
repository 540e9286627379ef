//! `bicirc-forest`: exact rooted spanning forest counts of bicirculant graphs
//! from the command line.

mod cache;
mod commands;

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use cache::CountCache;
pub use commands::run;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid spec: {0}")]
    Spec(String),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{0}")]
    Core(String),
    #[error("{what} disagree: {left} vs {right}")]
    Mismatch { what: String, left: String, right: String },
    #[error("check failed: {0}")]
    Falsified(String),
}

#[derive(Debug, Parser)]
#[command(name = "bicirc-forest", version, about = "Rooted spanning forest counts of bicirculant graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count rooted spanning forests of one graph.
    Count {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Also compute det(I + L) directly (only when 2n <= 200).
        #[arg(long)]
        check_oracle: bool,
        /// Also evaluate the certified Chebyshev product.
        #[arg(long)]
        check_cheb: bool,
    },
    /// Check the square structure of the counts over a range of orders.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tabulate counts over a range of orders.
    Sweep {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        check_oracle: bool,
        #[arg(long)]
        check_cheb: bool,
    },
    /// Growth constant by two routes and the convergence of f(2n) / M^n.
    Asymptote {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the built-in reference families against their published constants.
    Examples {
        /// Run only the family with this number (1-6).
        #[arg(long)]
        only: Option<u8>,
        /// Machine-readable pass/fail records.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// Graph spec as JSON: {"n": 3, "R": [1, 2], "T": [], "S": [0]}.
    #[arg(long, conflicts_with = "spec_file")]
    pub spec: Option<String>,
    /// Read the graph spec JSON from a file.
    #[arg(long)]
    pub spec_file: Option<PathBuf>,
    /// Order to evaluate at (defaults to the spec's own n).
    #[arg(long, conflicts_with = "n_range")]
    pub n: Option<u64>,
    /// Inclusive range of orders, written A..B.
    #[arg(long)]
    pub n_range: Option<NRange>,
    /// Precision ceiling for certified evaluation, in bits.
    #[arg(long, default_value_t = bicirc_core::numeric::MAX_PRECISION)]
    pub precision: u32,
    /// Directory for cached exact counts.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format (plain text when absent).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report to a file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Inclusive order range `A..B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub from: u64,
    pub to: u64,
}

impl NRange {
    pub fn orders(&self) -> impl Iterator<Item = u64> {
        self.from..=self.to
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let parse = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("bad bound {x:?}: {e}"));
        Ok(NRange { from: parse(a)?, to: parse(b)? })
    }
}
