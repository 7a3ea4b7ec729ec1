use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "removal", version, about = "Experiments on removal lemmas, odd-cycle samplers and cycle-space equations")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Seed for every randomised step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Report destination (or artifact destination for `rs build`, `eqs
    /// extract` and `graph gen`, whose report then goes to `<out>.json`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the number of available cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for witness files; defaults to the directory of `--out`.
    #[arg(long, global = true)]
    pub witness_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ruzsa-Szemeredi graphs.
    #[command(subcommand)]
    Rs(RsCommand),
    /// Linear equation systems.
    #[command(subcommand)]
    Eqs(EqsCommand),
    /// Strongly genus-one checks.
    #[command(subcommand)]
    Sgo(SgoCommand),
    /// Random tripartite graphs and triangle deletion.
    #[command(subcommand)]
    Pseudo(PseudoCommand),
    /// Convex equations in the span of a system.
    #[command(subcommand)]
    Convex(ConvexCommand),
    /// Vertex-sampling odd-cycle testers.
    #[command(subcommand)]
    Sampler(SamplerCommand),
    /// Exhaustive reference checks.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Graph generators and summaries.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Re-check a witness file.
    Verify {
        #[arg(long)]
        witness: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum RsCommand {
    Build {
        #[arg(long)]
        m: usize,
        /// Comma-separated elements of R.
        #[arg(long, value_delimiter = ',', conflicts_with = "r_file", required_unless_present = "r_file")]
        r: Vec<i64>,
        /// File with one element of R per line.
        #[arg(long)]
        r_file: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum EqsCommand {
    /// Weighted cycle system of a tripartite graph.
    Extract {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "ABC")]
        perm: String,
    },
    /// Genus-one check of a system.
    Genus {
        #[arg(long)]
        system: PathBuf,
        /// Largest number of variables searched exactly.
        #[arg(long, default_value_t = removal_core::equations::DEFAULT_GENUS_CAP)]
        cap: usize,
        /// Use this many random subsets instead of the exact search.
        #[arg(long)]
        falsify: Option<u64>,
    },
    /// Behrend-type 3-AP-free subset of [m].
    Behrend {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum SgoCommand {
    Certify {
        #[arg(long)]
        graph: PathBuf,
        /// Maximum number of colourings examined.
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
    },
    Falsify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Lex,
    CaFirst,
}

#[derive(Debug, Subcommand)]
pub enum PseudoCommand {
    Run {
        /// Part size.
        #[arg(long)]
        n: usize,
        /// Edge probability; defaults to n^(-3/4).
        #[arg(long)]
        p: Option<f64>,
        /// `all`, `none`, or a comma-separated list of property names.
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, value_enum, default_value_t = RuleArg::Lex)]
        rule: RuleArg,
        /// Random instances per falsification check.
        #[arg(long, default_value_t = removal_core::pseudorandom::DEFAULT_TRIALS)]
        trials: u64,
        /// Also write the triangle-free output graph here.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConvexCommand {
    Search {
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        system: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value = "ABC")]
        perm: String,
        /// Solve every candidate instead of stopping at the first success.
        #[arg(long)]
        all: bool,
        /// Attach a dual certificate to each infeasible candidate.
        #[arg(long)]
        dual: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Structured,
    Oblivious,
}

#[derive(Debug, Args)]
pub struct SamplerArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long = "l")]
    pub ell: usize,
    /// Rational `p/q` or decimal.
    #[arg(long)]
    pub eps: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Structured)]
    pub mode: ModeArg,
    /// Per-set sample size; defaults to the formula value.
    #[arg(long)]
    pub q: Option<u64>,
    /// Allow sample sizes above the number of vertices.
    #[arg(long)]
    pub no_cap: bool,
    /// `greedy` or `blowup:T` (the natural packing of a blown-up cycle).
    #[arg(long, default_value = "greedy")]
    pub packing: String,
    #[arg(long, default_value_t = removal_core::sampler::DEFAULT_NODE_CAP)]
    pub node_cap: u64,
}

#[derive(Debug, Subcommand)]
pub enum SamplerCommand {
    Trial {
        #[command(flatten)]
        args: SamplerArgs,
    },
    Estimate {
        #[command(flatten)]
        args: SamplerArgs,
        #[arg(long, default_value_t = 300)]
        trials: u64,
    },
    Family {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        eps: String,
        /// `affine:MUL:ADD` or a table `3:5,5:9`.
        #[arg(long, default_value = "affine:1:2")]
        growth: String,
        /// First member of the family.
        #[arg(long, default_value_t = 3)]
        ell1: usize,
        #[arg(long, default_value_t = 300)]
        trials: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Compare the genus-one search against enumeration of all subsets.
    Genus {
        #[arg(long)]
        system: PathBuf,
    },
    /// Count proper colourings.
    Colorings {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        colors: usize,
    },
    /// Whether every proper t-colouring has an increasing cycle.
    Increasing {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Low-degree peeling followed by a shortest odd cycle.
    Peel {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        eps: f64,
    },
    /// Largest subset of [m] with no non-trivial solution.
    SolutionFree {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        system: PathBuf,
        #[arg(long, default_value_t = removal_core::equations::DEFAULT_SUBSET_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    Cycle,
    Complete,
    Path,
    Grotzsch,
    /// Complete tripartite with parts of size n.
    Tripartite,
}

#[derive(Debug, Subcommand)]
pub enum GraphCommand {
    Gen {
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Blow every vertex up into t copies.
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    Info {
        #[arg(long)]
        graph: PathBuf,
    },
}
