use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hyperspec",
    version,
    about = "Alpha-spectral radius of uniform hypergraphs and extremal supertrees"
)]
pub struct Cli {
    /// Write the main output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Perron root and vector of A_alpha.
    Rho(RhoArgs),
    /// Build a named supertree.
    #[command(subcommand)]
    Construct(Construct),
    /// Rewrite a hypergraph.
    #[command(subcommand)]
    Transform(Transform),
    /// List every supertree class with m edges of size k.
    Enumerate(EnumerateArgs),
    /// Check that a construction is the unique spectral maximizer.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum GraphFormat {
    #[default]
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

pub fn parse_alpha(s: &str) -> Result<f64, String> {
    let a: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("not a number: {s:?}"))?;
    if (0.0..1.0).contains(&a) {
        Ok(a)
    } else {
        Err(format!("alpha must lie in [0, 1), got {a}"))
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_iterations: usize,
    /// Diagonal shift; defaults to 1 at alpha = 0 and 0 otherwise.
    #[arg(long)]
    pub shift: Option<f64>,
}

#[derive(Debug, Args)]
pub struct RhoArgs {
    /// Hypergraph file (JSON or plain), inline JSON, or `-` for stdin.
    pub input: String,
    #[arg(long, default_value = "0", value_parser = parse_alpha)]
    pub alpha: f64,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Hyperstar S_{m,k}.
    Star {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t)]
        format: GraphFormat,
    },
    /// T_{m,k,beta}, extremal for independence number beta.
    T {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        beta: usize,
        #[arg(long, value_enum, default_value_t)]
        format: GraphFormat,
    },
    /// H_{m,k,mu}, extremal for matching number mu.
    H {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        mu: usize,
        #[arg(long, value_enum, default_value_t)]
        format: GraphFormat,
    },
    /// G_pi, the BFS-supertree of a degree sequence.
    Bfs {
        #[arg(long)]
        k: usize,
        /// Comma-separated degrees.
        #[arg(long, value_delimiter = ',', required = true)]
        pi: Vec<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: GraphFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum Transform {
    /// Move edges onto a target vertex.
    Move {
        input: String,
        /// `{"target":..,"relocations":[[edge,pivot],..]}`, inline or a file.
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t)]
        format: GraphFormat,
    },
    /// Release a non-pendent edge of a supertree at one of its vertices.
    Release {
        input: String,
        #[arg(long)]
        edge: usize,
        #[arg(long)]
        at: usize,
        #[arg(long, value_enum, default_value_t)]
        format: GraphFormat,
    },
    /// Exchange vertex sets between two edges.
    Switch {
        input: String,
        /// `{"e":..,"f":..,"U1":[..],"V1":[..]}`, inline or a file.
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t)]
        format: GraphFormat,
    },
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub k: usize,
    /// Print only the number of classes.
    #[arg(long)]
    pub count: bool,
    /// `beta=B`, `mu=U` or `pi=d0,d1,...`.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long)]
    pub reverse_anchors: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyCommon {
    /// Comma-separated alpha grid.
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha, default_value = "0")]
    pub alpha: Vec<f64>,
    /// Write report.json, report.csv and counterexamples.json here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
    #[arg(long, default_value_t = 1e-8)]
    pub margin: f64,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// T_{m,k,beta} against all supertrees with independence number beta.
    Independence {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Every feasible beta when omitted.
        #[arg(long)]
        beta: Option<usize>,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// G_pi against all supertrees with degree sequence pi.
    DegreeSequence {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required_unless_present = "m")]
        pi: Option<Vec<usize>>,
        /// Every degree sequence realized with m edges, when pi is omitted.
        #[arg(long, conflicts_with = "pi")]
        m: Option<usize>,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// H_{m,k,mu} against all supertrees with matching number mu.
    Matching {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Every feasible mu when omitted.
        #[arg(long)]
        mu: Option<usize>,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// All three checks over several scales.
    Sweep {
        /// Comma-separated `m:k` pairs.
        #[arg(long, value_delimiter = ',', value_parser = parse_scale, required = true)]
        scales: Vec<(usize, usize)>,
        #[command(flatten)]
        common: VerifyCommon,
    },
}

fn parse_scale(s: &str) -> Result<(usize, usize), String> {
    let (m, k) = s
        .split_once(':')
        .ok_or_else(|| format!("expected m:k, got {s:?}"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("not a count: {t:?}"))
    };
    Ok((num(m)?, num(k)?))
}
