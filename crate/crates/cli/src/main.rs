//! `sti` — command line over the transmission-invariant library.
//!
//! Results go to standard output, diagnostics to standard error. Exit codes:
//! 0 clean, 1 usage/parse/I-O problems, 2 a theorem check produced a witness.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

/// Outcome of a subcommand that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Clean,
    /// A check failed; the witness was reported on standard error.
    WitnessFound,
}

/// Anything that stops a run with a diagnostic and exit code 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sti_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Output format for results on standard output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    /// One JSON object per line.
    #[value(alias = "verdict")]
    Json,
    /// graph6 lines.
    Graph6,
    /// Aligned human-readable table.
    Table,
}

#[derive(Parser)]
#[command(
    name = "sti",
    version,
    about = "Transmission-based graph invariants: analyze, construct, search, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify graphs: edge imbalances, uniform step, structural context
    Analyze {
        /// Inline graph6 literals
        #[arg(value_name = "GRAPH6", conflicts_with = "input")]
        graphs: Vec<String>,
        /// Read graph6 lines from this file, or `-` for standard input
        #[arg(short, long, value_name = "PATH")]
        input: Option<PathBuf>,
        /// Output format
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Construct one member of a parameterized family
    Family {
        /// Output format: the member itself (graph6) or its verdict (json)
        #[arg(long, value_enum, default_value_t = Emit::Graph6, global = true)]
        emit: Emit,
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Check the Cartesian product law on two graphs of equal order
    Product {
        /// The two factors as inline graph6 literals
        #[arg(value_name = "GRAPH6", conflicts_with = "input")]
        graphs: Vec<String>,
        /// Read the two factors from this file, or `-` for standard input
        #[arg(short, long, value_name = "PATH")]
        input: Option<PathBuf>,
        /// Output format
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Exhaustively catalog uniform-imbalance graphs up to a given order
    Search {
        /// Largest order to enumerate (at most 9)
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Enumerate bipartite graphs only (lossless: every member is bipartite)
        #[arg(long)]
        bipartite_only: bool,
        /// Keep only members with this uniform imbalance
        #[arg(long)]
        k: Option<u64>,
        /// Worker threads for the search pool (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Run the theorem checks over the catalog and append the report
        #[arg(long)]
        verify: bool,
        /// Output format
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Run the theorem checks over graphs given as graph6 input
    Verify {
        /// Inline graph6 literals
        #[arg(value_name = "GRAPH6", conflicts_with = "input")]
        graphs: Vec<String>,
        /// Read graph6 lines from this file, or `-` for standard input
        #[arg(short, long, value_name = "PATH")]
        input: Option<PathBuf>,
        /// Keep only members with this uniform imbalance
        #[arg(long)]
        k: Option<u64>,
        /// Output format
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Sweep all free trees and report which carry a uniform imbalance
    Trees {
        /// Largest order to enumerate (at most 16)
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Complete bipartite graph with sides of p and q vertices
    CompleteBipartite {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
    },
    /// Star with m leaves
    Star {
        #[arg(short)]
        m: usize,
    },
    /// Path on m vertices
    Path {
        #[arg(short)]
        m: usize,
    },
    /// Cycle on m vertices
    Cycle {
        #[arg(short)]
        m: usize,
    },
    /// Ring of 2q independent p-sets, consecutive hubs joined through each
    Gamma {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
    },
    /// Ring alternating independent p-sets and 2-sets between 2q hubs
    H {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
    },
    /// Path on n - r vertices plus r vertices joined to both of its ends
    G {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
    },
    /// Cycle on 2m vertices plus a hub adjacent to every other cycle vertex
    AlternatingWheel {
        #[arg(short)]
        m: usize,
    },
    /// Copies of one graph glued at a shared root vertex
    Amalgamation {
        /// Operand graph as an inline graph6 literal
        #[arg(long, value_name = "GRAPH6")]
        operand: String,
        /// Vertex of the operand shared by all copies
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Number of copies
        #[arg(long)]
        copies: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::WitnessFound) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
