//! `hyperfuzz` command-line front end.
//!
//! Exit codes: 0 evaluated or held, 1 theorem falsified, 2 usage or parse
//! error, 3 search exhausted without a witness.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hyperfuzz",
    version,
    about = "Ideals, filters and their fuzzy counterparts on finite ≤-hypergroupoids"
)]
pub struct Cli {
    /// Worker threads for verification runs (defaults to available cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every applicable predicate on one structure.
    Check {
        /// Structure file (`elements:` / `op:` / `le:` lines).
        structure: String,
        #[arg(long)]
        subset: Option<String>,
        #[arg(long)]
        fuzzy: Option<String>,
    },
    /// Verify theorems over exhaustive or sampled domains.
    Verify {
        /// prop6, prop7, prop8, prop12, prop17, lemma5, all, or an extra check
        /// (prop6_7_8, remark10, remark15, prime_decomposition).
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        order: usize,
        /// Grid denominator k for fuzzy quantification.
        #[arg(long, default_value_t = 2)]
        grid: u64,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sampled structures in sample mode.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        /// Fix the relation (bitmask, bit x·n+y means x ≤ y) and range over
        /// hyperoperations only; required for exhaustive runs above order 2.
        #[arg(long)]
        relation: Option<u64>,
        /// Hyperoperation ordinal range `start..end` (with --relation).
        #[arg(long)]
        range: Option<String>,
    },
    /// Count (and optionally list) enumeration domains or census results.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 2)]
        grid: u64,
        #[arg(long)]
        list: bool,
    },
    /// Search for a counterexample with one hypothesis dropped.
    Search {
        #[arg(long = "relax")]
        relaxation: String,
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Sample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Structures,
    Relations,
    Subsets,
    Fuzzy,
    Ideals,
    Filters,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(commands::EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("global pool is configured once");
    }
    let outcome = commands::run(cli.command);
    print!("{}", outcome.stdout);
    for line in &outcome.stderr {
        eprintln!("{line}");
    }
    ExitCode::from(outcome.code)
}
