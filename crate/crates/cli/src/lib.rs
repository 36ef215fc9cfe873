//! Command-line front end: CSV ingestion and the `solve`, `verify`, `bound`
//! and `demo` commands.

pub mod args;
pub mod commands;
pub mod config;
pub mod ingest;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::commands::Status;
use crate::config::RunConfig;

/// Parses `argv` and runs the command. Usage errors map to [`Status::Failure`].
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> Status
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() {
                Status::Failure
            } else {
                Status::Success
            };
        }
    };
    match cli.command {
        Command::Solve(args) => match RunConfig::from_solve(&args) {
            Ok(config) => commands::cmd_solve(&config, (out, err)),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                Status::Failure
            }
        },
        Command::Verify(args) => match RunConfig::from_common(&args.common) {
            Ok(config) => commands::cmd_verify(&config, (out, err)),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                Status::Failure
            }
        },
        Command::Bound { n, m } => commands::cmd_bound(n, m, (out, err)),
        Command::Demo(args) => commands::cmd_demo(args.dedupe, args.format, (out, err)),
    }
}
