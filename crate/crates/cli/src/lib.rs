//! The `coideal-atlas` command line: listings, the table of proper
//! subalgebras, exact counts, verification suites and pair analysis.

pub mod args;
pub mod commands;
pub mod listing;
pub mod render;
pub mod tableau;

use clap::Parser;

pub use args::{Cli, Command, CountWhich, Format, Suite};
pub use commands::{execute, run_suite, CliError, Outcome, RunConfig, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
pub use listing::{borel_listing, parse_listing, GeneratorRecord, Listing, ListingError, Record};
pub use tableau::{proper_records, render as render_tableau};

/// Version tag carried by every machine-readable output.
pub const SCHEMA: &str = "coideal-atlas/1";

/// Parse `args` (program name first) and execute, writing results to
/// standard output or `--out`.  Returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        if let Some(t) = cfg.threads {
            // The pool can only be installed once per process; later calls
            // keep the first size.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
        let out = execute(&cfg)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, &out.stdout)?,
            None => print!("{}", out.stdout),
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
