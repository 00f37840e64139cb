//! The `polyarc` command line.
//!
//! [`run`] holds the whole program so tests can drive it without spawning a
//! process. Exit status: 0 success, 1 usage error, 2 computation error,
//! 3 unexpected verification result under `verify --strict`.

pub mod args;
mod commands;
pub mod output;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;
use output::Painter;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_STRICT: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Bad input that clap could not catch on its own.
    Usage(String),
    Compute(polyarc_core::Error),
    Io(io::Error),
    /// `--strict` found unexpected results; the report is already printed.
    Strict(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => EXIT_USAGE,
            Self::Compute(_) | Self::Io(_) => EXIT_COMPUTE,
            Self::Strict(_) => EXIT_STRICT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(msg) => f.write_str(msg),
            Self::Compute(e) => write!(f, "{e}"),
            Self::Io(e) => write!(f, "{e}"),
            Self::Strict(n) => write!(f, "{n} unexpected verification result(s)"),
        }
    }
}

impl From<polyarc_core::Error> for CliError {
    fn from(e: polyarc_core::Error) -> Self {
        Self::Compute(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::Io(e.into())
    }
}

/// Runs one invocation (`args[0]` is the program name) and returns the exit
/// status. `color` enables ANSI colour in human-readable output.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match commands::dispatch(cli.command, out, Painter { color }) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Usage(_) = e {
                let _ = writeln!(err, "\nFor more information, try '--help'.");
            }
            e.exit_code()
        }
    }
}
