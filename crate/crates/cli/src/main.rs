mod commands;
mod target;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tpcode::limits::Limits;
use tpcode::verify::Suite;

const AFTER_HELP: &str = "\
GRAPH TARGETS (tpc-decide)
  path:n  cycle:n  complete:n  kmn:m,n  star:n  corona:path:n  fig1  file:<path>
  file:<path> reads the JSON graph format written by zdg-export.
  Anything else is read as a ring expression.

ENVIRONMENT
  TPC_RING_ORDER_CAP  largest ring order any constructor builds
  TPC_SEARCH_BOUND    vertex bound for exact search in deciders
  TPC_ENUM_BOUND      vertex bound for enumerating every code
  Flags beat environment variables, which beat --config, which beats the defaults.

EXIT CODES
  0 success or consensus, 1 usage or input error, 2 unexpected discrepancy";

#[derive(Debug, Parser)]
#[command(
    name = "tpcode",
    version,
    about = "Zero-divisor graphs of finite commutative rings and their total perfect codes",
    before_long_help = tpcode::parser::GRAMMAR,
    after_long_help = AFTER_HELP
)]
pub struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// TOML file with ring_order_cap, search_vertex_bound, enumeration_bound.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Worker threads for sweeps (0 = one per processor).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(flatten)]
    caps: Caps,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct Caps {
    /// Largest ring order to build.
    #[arg(long, global = true, env = "TPC_RING_ORDER_CAP", value_name = "N")]
    ring_order_cap: Option<usize>,
    /// Exact search runs on graphs up to this many vertices.
    #[arg(long, global = true, env = "TPC_SEARCH_BOUND", value_name = "N")]
    search_bound: Option<usize>,
    /// Enumerating every code is refused above this many vertices.
    #[arg(long, global = true, env = "TPC_ENUM_BOUND", value_name = "N")]
    enum_bound: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ReadingArg {
    Corrected,
    AsWritten,
}

impl From<ReadingArg> for tpcode::treelab::Reading {
    fn from(r: ReadingArg) -> Self {
        match r {
            ReadingArg::Corrected => tpcode::treelab::Reading::Corrected,
            ReadingArg::AsWritten => tpcode::treelab::Reading::AsWritten,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, units, zero-divisors, structure flags and annihilator sizes.
    RingInfo {
        /// Ring expression; `tpcode --help` has the grammar.
        ring: String,
    },

    /// Writes the zero-divisor graph as DOT or JSON.
    ZdgExport {
        ring: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long, short, value_name = "FILE")]
        output: Option<PathBuf>,
    },

    /// Runs every applicable decider and the exact search on a ring or graph.
    TpcDecide {
        /// Ring expression or graph target; `tpcode --help` lists both.
        target: String,
    },

    /// Runs a verification suite against the known-findings manifest.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Upper bound for paths, cycles and zn-sweep.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = tpcode::verify::DEFAULT_SEED)]
        seed: u64,
        /// Exact search bound inside ring suites.
        #[arg(long)]
        exact_bound: Option<usize>,
        /// Largest order for the exhaustive tree reduction (0 skips it).
        #[arg(long)]
        reduction_max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "corrected")]
        reading: ReadingArg,
        /// Run instances on one thread.
        #[arg(long)]
        sequential: bool,
        /// Replace the shipped known-findings manifest.
        #[arg(long, value_name = "FILE")]
        manifest: Option<PathBuf>,
        /// Also write the JSON report here.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },

    /// Replays a build trace, or grows a random one, and checks the tree.
    TreeGen {
        /// JSON trace: {"initial": 4, "steps": [{"op": "A2", "at": 1}]}.
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        trace: Option<PathBuf>,
        /// Seed and vertex budget.
        #[arg(long, num_args = 2, value_names = ["SEED", "BUDGET"])]
        random: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value = "corrected")]
        reading: ReadingArg,
        /// Write the tree in the JSON graph format here.
        #[arg(long, short, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: tpcode::Error| e.to_string())
}

impl Cli {
    fn limits(&self) -> anyhow::Result<Limits> {
        let mut limits = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
                toml::from_str(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?
            }
            None => Limits::default(),
        };
        if let Some(v) = self.caps.ring_order_cap {
            limits.ring_order_cap = v;
        }
        if let Some(v) = self.caps.search_bound {
            limits.search_vertex_bound = v;
        }
        if let Some(v) = self.caps.enum_bound {
            limits.enumeration_bound = v;
        }
        Ok(limits)
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors; 2 is reserved for discrepancies here
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let limits = match cli.limits() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let code = tpcode::par::with_threads(cli.jobs, || commands::run(&cli, &limits));
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
