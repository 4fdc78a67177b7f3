use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "srgswitch",
    version,
    about = "Line graphs of linear representations of maximal arcs and WQH switching"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the line graph and report its parameters.
    Build(GeometryArgs),
    /// Build the line graph and apply the switch.
    Switch(GeometryArgs),
    /// Check a graph6 file: parameters, geometricity, and optionally a partition.
    Verify(VerifyArgs),
    /// Check the non-geometricity witness edge of the switched graph.
    Witness(GeometryArgs),
    /// Spectrum and characteristic polynomial modulo primes.
    Spectrum(SpectrumArgs),
    /// Repeated switching census.
    Explore(ExploreArgs),
    /// Vertex to line table and the point set.
    Export(GeometryArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GeometryArgs {
    /// Field degree: q = 2^h.
    #[arg(long = "h")]
    pub h: Option<u32>,
    /// Denniston degree exponent: arcs of degree 2^m.
    #[arg(long = "m")]
    pub m: Option<u32>,
    /// Point set file instead of a Denniston arc (needs --h, excludes --m).
    #[arg(long, value_name = "FILE")]
    pub arc: Option<PathBuf>,
    /// GF(2) basis of the additive subgroup, as field element integers.
    #[arg(long, value_delimiter = ',', value_name = "A,B,..")]
    pub subgroup: Option<Vec<u32>>,
    #[arg(long, value_name = "N")]
    pub alpha: Option<usize>,
    /// Index of the secant line.
    #[arg(long, value_name = "I")]
    pub secant: Option<usize>,
    /// Index of P among the set's points on the secant.
    #[arg(long = "p", value_name = "I")]
    pub p: Option<usize>,
    /// Indices of the planes M1, M2 through the secant.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pub pplane: Option<Vec<usize>>,
    /// Indices of Q1, Q2 in the point set.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pub qpair: Option<Vec<usize>>,
    /// Output directory; graph6 goes to standard output when absent.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Lines per point minus one.
    #[arg(long = "t")]
    pub t: usize,
    /// JSON file with cells `{"c1": [...], "c2": [...]}`.
    #[arg(long, value_name = "FILE")]
    pub partition: Option<PathBuf>,
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    /// graph6 file; otherwise the graph is built from the geometry flags.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', value_name = "P1,P2,P3")]
    pub primes: Option<Vec<u64>>,
    /// Also switch before computing.
    #[arg(long)]
    pub switched: bool,
    #[command(flatten)]
    pub geometry: GeometryArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ExploreArgs {
    #[arg(long, default_value_t = 1)]
    pub depth: usize,
    #[arg(long, default_value_t = 8)]
    pub limit: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Switching cell size; defaults to q.
    #[arg(long)]
    pub cell_size: Option<usize>,
    #[command(flatten)]
    pub geometry: GeometryArgs,
}
