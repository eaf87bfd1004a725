//! `regset`: construct and verify regular sets in Cayley graphs.
//!
//! Exit codes: 0 success/pass, 1 input or parameter error, 2 proven
//! negative (nonexistence, verification failure, not a perfect code),
//! 3 internal disagreement found by `enumerate`.

mod cert;
mod commands;
mod input;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "regset",
    version,
    about = "Regular sets in Cayley graphs on finite groups",
    long_about = "Decides whether a normal subgroup H of a finite group G is a \
                  (kappa, tau)-regular set of some Cayley graph on G, constructs an \
                  explicit connection-set witness or proves nonexistence, and \
                  verifies claims with a brute-force oracle.\n\n\
                  Groups are given as builtin family expressions (cyclic:6, \
                  dihedral:4, symmetric:4, alternating:4, quaternion, elemab:2:3, \
                  product:cyclic:2,cyclic:4) or as @path to a multiplication-table \
                  file. Element sets are comma-separated indices or @path to a file."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a connection set making H a (kappa,tau)-regular set, or prove
    /// that none exists
    Construct {
        /// Group: family expression or @path to a table file
        #[arg(long)]
        group: String,
        /// Subgroup element indices (comma-separated or @file)
        #[arg(long)]
        subgroup: String,
        /// Neighbors inside H for vertices of H
        #[arg(long)]
        kappa: usize,
        /// Neighbors inside H for vertices outside H
        #[arg(long)]
        tau: usize,
        /// Emit one JSON record per line instead of plain text
        #[arg(long)]
        records: bool,
        /// Run the O(n^3) associativity scan on @file tables
        #[arg(long)]
        check_associativity: bool,
    },
    /// Check whether R is a (kappa,tau)-regular set of Cay(G, X)
    Verify {
        /// Group: family expression or @path to a table file
        #[arg(long)]
        group: String,
        /// Connection set X (comma-separated indices or @file)
        #[arg(long)]
        x: String,
        /// Vertex subset R (comma-separated indices or @file)
        #[arg(long)]
        r: String,
        /// Emit one JSON record per line instead of plain text
        #[arg(long)]
        records: bool,
        /// Run the O(n^3) associativity scan on @file tables
        #[arg(long)]
        check_associativity: bool,
    },
    /// Decide whether H is a perfect code of G and print a transversal
    CheckCode {
        /// Group: family expression or @path to a table file
        #[arg(long)]
        group: String,
        /// Subgroup element indices (comma-separated or @file)
        #[arg(long)]
        subgroup: String,
        /// Emit one JSON record per line instead of plain text
        #[arg(long)]
        records: bool,
        /// Run the O(n^3) associativity scan on @file tables
        #[arg(long)]
        check_associativity: bool,
    },
    /// Sweep the builtin catalog, build every admissible witness, and
    /// cross-check against the oracle and the exhaustive search
    Enumerate {
        /// Largest group order to include
        #[arg(long, default_value_t = 24)]
        max_order: usize,
        /// Run the exhaustive search only when the group has at most this
        /// many inversion-orbits; larger groups are marked "skipped"
        #[arg(long, default_value_t = 12)]
        exhaustive_bound: usize,
        /// Emit one JSON record per line instead of plain text
        #[arg(long)]
        records: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => commands::EXIT_INPUT,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    let outcome = match &cli.command {
        Command::Construct {
            group,
            subgroup,
            kappa,
            tau,
            records,
            check_associativity,
        } => commands::construct(
            group,
            subgroup,
            *kappa,
            *tau,
            *records,
            *check_associativity,
        ),
        Command::Verify {
            group,
            x,
            r,
            records,
            check_associativity,
        } => commands::verify(group, x, r, *records, *check_associativity),
        Command::CheckCode {
            group,
            subgroup,
            records,
            check_associativity,
        } => commands::check_code(group, subgroup, *records, *check_associativity),
        Command::Enumerate {
            max_order,
            exhaustive_bound,
            records,
        } => commands::enumerate(*max_order, *exhaustive_bound, *records),
    };

    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(commands::EXIT_INPUT)
        }
    }
}
