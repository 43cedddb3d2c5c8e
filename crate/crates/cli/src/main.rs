use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod run;

/// Build graph products, label them with weak integer-additive set-indexers,
/// verify labelings and compute sparing numbers.
#[derive(Debug, Parser)]
#[command(name = "weakiasi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a product graph and its vertex map.
    Build {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Plan and assign a weak IASI, for a product or for a single graph.
    Label {
        #[arg(long, conflicts_with_all = ["op", "g1", "g2"])]
        graph: Option<PathBuf>,
        #[command(flatten)]
        pair: OptionalPairArgs,
        /// Weak IASI of the first factor; derived from the exact search if absent.
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Weak IASI of the second factor; derived from the exact search if absent.
        #[arg(long)]
        labels2: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check a labeling; exits with status 4 when it is not a weak IASI.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact sparing number, with closed-form comparison where one applies.
    Sparing {
        #[arg(long, conflicts_with_all = ["op", "g1", "g2"])]
        graph: Option<PathBuf>,
        #[command(flatten)]
        pair: OptionalPairArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the small-graph property sweep and write a summary table.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Cartesian,
    Direct,
    Strong,
    Lex,
    Corona,
    Rooted,
    Union,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[arg(long)]
    g1: PathBuf,
    #[arg(long)]
    g2: PathBuf,
    /// Root vertex of the second graph for rooted products.
    #[arg(long, default_value_t = 0)]
    root: usize,
}

#[derive(Debug, Args)]
struct OptionalPairArgs {
    #[arg(long, value_enum, requires_all = ["g1", "g2"])]
    op: Option<Op>,
    #[arg(long, requires = "op")]
    g1: Option<PathBuf>,
    #[arg(long, requires = "op")]
    g2: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    root: usize,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Directory for output artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest graph the exact search accepts (falls back to WEAKIASI_ORACLE_BOUND).
    #[arg(long)]
    oracle_bound: Option<usize>,
    /// Accept input graphs with isolated vertices.
    #[arg(long)]
    allow_isolated: bool,
    /// Also write a Graphviz rendering.
    #[arg(long)]
    dot: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(run::EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(run::exit_code(&err))
        }
    }
}
