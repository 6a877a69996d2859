use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "acs", version, about = "Z2 homology of anchored configuration spaces")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Print a JSON run report instead of tables.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads; 0 picks the number of CPUs.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    /// Refuse to build complexes with more cells than this.
    #[arg(long, global = true, default_value_t = 5_000_000)]
    pub max_cells: u128,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cell counts and Euler characteristic of Ω_n.
    Fvector {
        #[arg(long)]
        n: usize,
    },
    /// Betti numbers of Ω_n.
    Betti {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Run verification suites on Ω_n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated list of checks.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        checks: Vec<Check>,
    },
    /// Certify the explicit homology generators of Ω_n.
    Basis {
        #[arg(long)]
        n: usize,
        /// Only this dimension (default: all).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Betti numbers of the anchored configuration space of a graph.
    Graph {
        /// Graph description in JSON.
        #[arg(long)]
        input: PathBuf,
        /// Overrides the point count given in the file.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphMethod::Gf2)]
        method: GraphMethod,
    },
    /// Summary of the graph Hom(K_m, K_{m+1}).
    HomGraph {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Morse,
    Gf2,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Morse => "morse",
            Method::Gf2 => "gf2",
        }
    }

    /// Largest `n` accepted by this method.
    pub fn cap(self) -> usize {
        match self {
            Method::Formula => 12,
            Method::Morse => 9,
            Method::Gf2 => 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphMethod {
    Gf2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Acyclicity,
    MorseBoundary,
    Basis,
    Pairing,
    Oracle,
    All,
}

impl Check {
    pub const SUITES: [Check; 5] = [Check::Acyclicity, Check::MorseBoundary, Check::Basis, Check::Pairing, Check::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Check::Acyclicity => "acyclicity",
            Check::MorseBoundary => "morse-boundary",
            Check::Basis => "basis",
            Check::Pairing => "pairing",
            Check::Oracle => "oracle",
            Check::All => "all",
        }
    }

    /// Largest `n` the suite runs at; suites using GF(2) elimination on the
    /// whole complex stop earlier.
    pub fn cap(self) -> usize {
        match self {
            Check::Acyclicity | Check::MorseBoundary | Check::Pairing => Method::Morse.cap(),
            Check::Basis | Check::Oracle => Method::Gf2.cap(),
            Check::All => Method::Gf2.cap(),
        }
    }
}

/// Expands `all` and removes duplicates, keeping the canonical order.
pub fn expand_checks(checks: &[Check]) -> Vec<Check> {
    if checks.contains(&Check::All) {
        return Check::SUITES.to_vec();
    }
    let mut out = checks.to_vec();
    out.sort_unstable();
    out.dedup();
    out
}
