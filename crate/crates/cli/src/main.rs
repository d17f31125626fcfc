//! `sigdom`: generate, sign, verify and solve double domination instances.
//!
//! Exit status: 0 success, 1 negative verdict, 2 usage or input error,
//! 3 solver budget exhausted.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::output::{Status, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(
    name = "sigdom",
    version,
    about = "Double domination in signed cubic graphs"
)]
pub struct Cli {
    /// Emit a JSON run report instead of `key: value` lines.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for every random draw in the run.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the edge list of a family graph: `P n k`, `I n j k` or `K4U m`.
    Gen(GenArgs),
    /// Attach a signature to a graph file.
    Sign(SignArgs),
    /// Check whether a vertex set is a double dominating set.
    Verify(VerifyArgs),
    /// Build the closed-form set for a family graph and self-check it.
    Construct(ConstructArgs),
    /// Exact minimum by branch and bound.
    Solve(SolveArgs),
    /// Tabulate constructions, bounds and solver values over a parameter range.
    Sweep(SweepArgs),
    /// Test a signed graph for balance.
    Balance(InputArgs),
    /// Switch a signed graph at a vertex set.
    Switch(SwitchArgs),
    /// Decompose the cut between a set and its complement into cycles.
    DecomposeCut(SetArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family name followed by its parameters.
    #[arg(required = true, num_args = 1..)]
    pub family: Vec<String>,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true)))]
pub struct SignArgs {
    /// Plain or signed edge-list file.
    pub graph: PathBuf,
    /// Every edge positive.
    #[arg(long, group = "mode")]
    pub all_positive: bool,
    /// Each edge negative independently with probability P.
    #[arg(long, group = "mode", value_name = "P")]
    pub random: Option<f64>,
    /// File listing the negative edges, one `a b` pair per line.
    #[arg(long, group = "mode", value_name = "FILE")]
    pub negative: Option<PathBuf>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Signed edge-list file.
    pub signed: PathBuf,
}

#[derive(Debug, Args)]
pub struct SetArgs {
    /// Edge-list file, plain or signed.
    pub graph: PathBuf,
    /// Vertex set: comma separated indices or family labels (`u0,v3`).
    pub set: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Signed edge-list file.
    pub signed: PathBuf,
    /// Vertex set: comma separated indices or family labels (`u0,v3`).
    pub set: String,
    /// Required domination multiplicity.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// `P n k` or `I n j k`.
    #[arg(required = true, num_args = 1..)]
    pub family: Vec<String>,
    /// The size-2m set of P(2m,1), valid for the all-positive signature.
    #[arg(long)]
    pub tight: bool,
    /// Random signatures used by the self-check.
    #[arg(long, default_value_t = 100)]
    pub signatures: usize,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Signed edge-list file.
    pub signed: PathBuf,
    /// Required domination multiplicity.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Refuse graphs with more vertices.
    #[arg(long, default_value_t = 24)]
    pub max_n: usize,
    /// Stop after this many search nodes.
    #[arg(long)]
    pub max_nodes: Option<u64>,
    /// Stop after this many seconds.
    #[arg(long, value_name = "SECS")]
    pub time_limit: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// `P` or `I`.
    #[arg(long, default_value = "P")]
    pub family: String,
    /// Rim sizes, e.g. `3..12` (inclusive) or `17`.
    #[arg(long)]
    pub n: String,
    /// Inner steps.
    #[arg(long)]
    pub k: String,
    /// Outer steps for `I`; only `j <= k` is used. Defaults to `2..k`.
    #[arg(long)]
    pub j: Option<String>,
    /// Solve exactly when the vertex count `2n` is at most this.
    #[arg(long, default_value_t = 24)]
    pub cap: usize,
    /// Random signatures solved per instance; the largest value is reported.
    #[arg(long, default_value_t = 1)]
    pub signatures: usize,
    #[arg(long)]
    pub max_nodes: Option<u64>,
    /// CSV output file; stdout when omitted.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SwitchArgs {
    /// Signed edge-list file.
    pub signed: PathBuf,
    /// Vertex set to switch at.
    pub set: String,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(status) => status.into(),
        Err(err) => {
            eprintln!("error: {err:#}");
            Status::InputError.into()
        }
    }
}
