use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ccteam", version, about = "Core comfortable teams in networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Profile an edge-list file and find teams in each component.
    Analyze(AnalyzeArgs),
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Run an experiment config and write CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub path: PathBuf,
    /// Run GOCOM.
    #[arg(long)]
    pub gocom: bool,
    /// Run CONCOMF at radius K.
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u32).range(1..))]
    pub concomf: Option<u32>,
    /// Exact minimum and maximum teams at radius K.
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u32).range(1..))]
    pub oracle: Option<u32>,
    /// Shrink each heuristic team (Min CC).
    #[arg(long)]
    pub min: bool,
    /// Grow each heuristic team (Max CC).
    #[arg(long)]
    pub max: bool,
    /// Size/radius trade-off for k = 1..diam.
    #[arg(long)]
    pub pareto: bool,
    /// Also write Graphviz DOT with team members highlighted.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    /// Print the JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Vertex limit for the exact solver.
    #[arg(long, value_name = "N", default_value_t = ccteam::oracle::DEFAULT_CAP)]
    pub oracle_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Path,
    Cycle,
    Star,
    Complete,
    Grid,
    Gnp,
    #[value(name = "scale_free", alias = "scale-free")]
    ScaleFree,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability for gnp.
    #[arg(long)]
    pub p: Option<f64>,
    /// Attachment count for scale_free.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub config: PathBuf,
    /// CSV destination; overrides `output` in the config.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
