//! Command-line arguments.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountWhich {
    /// Right coideal subalgebras of U_q⁺ containing k[G].
    Borel,
    /// Pairs (θ, θ′) giving subalgebras of U_q containing k[H].
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Derivatives,
    Omega,
    Pbw,
    Coideal,
    Theorem26,
    Decode,
    Double,
    Sh,
    Derm,
    Consistency,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// List all (n+1)! right coideal subalgebras of U_q⁺(sl_{n+1}).
    Borel,
    /// The table of proper right coideal subalgebras.
    Tableau,
    /// Count subalgebras exactly.
    Count {
        #[arg(value_enum)]
        which: CountWhich,
    },
    /// Run a verification suite; exit status 0 iff it passes.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Decide whether U⁻_θ′ ⊗ k[H] ⊗ U⁺_θ is a subalgebra; exit status 1 on
    /// reject.
    Pair {
        /// θ for the positive wing, e.g. `1,0` or `(1,0)`.
        theta: String,
        /// θ′ for the negative wing.
        theta_neg: String,
        /// Also print the straightened cross-brackets of PBW generators.
        #[arg(long)]
        symbolic: bool,
    },
}

#[derive(Clone, Debug, Parser)]
#[command(name = "coideal-atlas", version, about = "Right coideal subalgebras of quantum sl(n+1)")]
pub struct Cli {
    /// Rank n of sl(n+1) [default: 3; inferred from θ for `pair`].
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Total-degree bound for linear-algebra checks.
    #[arg(long, global = true, default_value_t = 6)]
    pub bound: u32,
    /// Worker threads.
    #[arg(long, global = true, env = "ATLAS_THREADS")]
    pub threads: Option<usize>,
    /// Use the generic multiparameter bicharacter instead of p_ij = q^{a_ij}.
    #[arg(long, global = true)]
    pub multiparameter: bool,
    /// Write the result to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Draw diagrams with ○/● instead of o/*.
    #[arg(long, global = true)]
    pub unicode: bool,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}
