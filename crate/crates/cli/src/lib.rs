//! The `kripto` command line. [`run`] parses arguments, dispatches, prints
//! errors to standard error and returns the process exit status.

mod args;
mod commands;
mod io;

use std::ffi::OsString;
use std::fmt;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

/// A failure after argument parsing.
#[derive(Debug)]
pub enum CliError {
    /// Inconsistent or missing options: exit 1.
    Usage(String),
    /// Bad key file, unreadable input, a cipher refusing its input: exit 2.
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

pub type Result<T> = std::result::Result<T, CliError>;

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("kripto: {e}");
            e.exit_code()
        }
    }
}
