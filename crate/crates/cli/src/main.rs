//! `headplace` — head-placement cost landscapes, the word-order permutation
//! ring, and the constituent dependency-length calculus on the command line.
//!
//! Exit status: 0 on success, 1 on domain or validation failures (including
//! verification mismatches), 2 on usage errors.

mod commands;
mod costspec;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "headplace", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Total cost of every head position for n dependents under a cost spec.
    Landscape {
        /// Number of dependents (at least 2).
        #[arg(long)]
        n: usize,
        /// identity | pow:G | exp:B | affine:A,C | table:V1,V2,...
        #[arg(long, default_value = "identity")]
        cost: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check analytic optima against exhaustive arrangement enumeration.
    Verify {
        /// Largest dependent count to enumerate (2..=8).
        #[arg(long = "n-max")]
        n_max: usize,
        /// Cost spec; the verdict must not depend on it.
        #[arg(long, default_value = "identity")]
        cost: String,
    },
    /// The six word orders, their ring edges and both distance metrics.
    Ring {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Language frequencies by clockwise distance, with correlation tests.
    Correlate {
        /// Dataset file, one tab-separated ORDER COUNT per line; bundled data if omitted.
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Constituent-level dependency length calculus.
    #[command(subcommand)]
    Appendix(AppendixCommand),
}

#[derive(Debug, Subcommand)]
enum AppendixCommand {
    /// Head-to-head dependency length sum for an order and placement.
    Delta {
        #[arg(long, value_enum)]
        order: OrderArg,
        /// Boundary placement; omit it to pass explicit splits instead.
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        /// Subject length |S|.
        #[arg(long)]
        s: Option<u64>,
        /// Verb length |V|.
        #[arg(long)]
        v: Option<u64>,
        /// Object length |O|.
        #[arg(long)]
        o: Option<u64>,
        /// Words left of the verb head (L_V).
        #[arg(long)]
        lv: Option<u64>,
        /// Words right of the object head (R_O).
        #[arg(long)]
        ro: Option<u64>,
        /// Words left of the object head (L_O).
        #[arg(long)]
        lo: Option<u64>,
        /// Words right of the subject head (R_S).
        #[arg(long)]
        rs: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Which side of the nominal heads is cheaper for their dependents.
    Prefer {
        #[arg(long, value_enum)]
        order: OrderArg,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        o: u64,
        /// Verb length; the verdict never depends on it.
        #[arg(long, default_value_t = 1)]
        v: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cost of reordering SVO into SOV from either dependent placement.
    Regress {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        o: u64,
        #[arg(long, default_value_t = 1)]
        v: u64,
        /// Words left of the verb head, shared by both variants.
        #[arg(long, default_value_t = 0)]
        lv: u64,
        /// Internal cost sums of the left-placing source, as S,V,O.
        #[arg(long, value_name = "S,V,O")]
        internal_left: Option<String>,
        /// Internal cost sums of the right-placing source, as S,V,O.
        #[arg(long, value_name = "S,V,O")]
        internal_right: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Expected SVO dependency sum under length distributions.
    Expect {
        /// Distribution of |S|: a length, or comma-separated LENGTH:PROB pairs.
        #[arg(long)]
        dist_s: String,
        /// Distribution of |O|.
        #[arg(long)]
        dist_o: String,
        /// Distribution of |V|.
        #[arg(long)]
        dist_v: String,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    #[value(name = "SOV", alias = "sov")]
    Sov,
    #[value(name = "SVO", alias = "svo")]
    Svo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

/// Failures split by exit status: usage errors exit 2, domain errors exit 1.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }
}

macro_rules! domain_error_from {
    ($($source:ty),+) => {
        $(impl From<$source> for CliError {
            fn from(error: $source) -> Self {
                CliError::Domain(error.to_string())
            }
        })+
    };
}

domain_error_from!(
    headplace_core::CostError,
    headplace_core::OracleError,
    headplace_core::StatsError,
    headplace_core::word_order::DatasetError,
    headplace_core::constituents::ConstituentError,
    std::io::Error
);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help/--version.
        Err(error) => error.exit(),
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
    }
}
