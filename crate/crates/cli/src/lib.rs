//! Command-line front end for `zeta-lab`.
//!
//! Every subcommand produces rows with a fixed column order, written as CSV
//! (header row, LF line endings) or as a JSON array of objects. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | usage error (bad flags, malformed numbers, invalid grids) |
//! | 2 | domain error (pole, singular factor, no convergence) |
//! | 3 | a `verify` suite failed |
//! | 4 | output file could not be read or written |

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod rows;
pub mod verify;

pub use cli::{Cli, Command};
pub use config::SweepConfig;
pub use error::{CliError, EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};
pub use report::{Format, Record};
pub use rows::{DiagRow, EvalRow, SweepRow, VerifyRow, ZeroRow};

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let output = &cli.output;
    match &cli.command {
        Command::Eval { s, what } => commands::eval(*s, *what, output, out),
        Command::Diag(args) => commands::diag(args, output, out),
        Command::Zeros(args) => commands::zeros(args, output, out),
        Command::SweepU(args) => commands::sweep_u(args, output, out),
        Command::Verify { suite, seed } => commands::verify(*suite, *seed, output, out),
    }
}
