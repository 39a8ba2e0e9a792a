//! Library half of the `altwords` binary.
//!
//! The executable is a thin wrapper around [`run`]; keeping everything else
//! in a library crate lets tests drive the argument parsing, the command
//! implementations and the verification machinery directly (including with
//! deliberately damaged reference data).
//!
//! Exit statuses: 0 success, 2 command-line usage error, 3 domain error
//! (arguments parse but name something the mathematics does not define),
//! 4 verification failure, 5 internal fault.

use clap::Parser;

pub mod args;
pub mod commands;
pub mod verify;

/// A failure with the exit status it maps to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    /// The request is well-formed but falls outside the defined domain.
    pub fn domain(message: impl Into<String>) -> CliError {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

/// Parses the command line and runs the command; returns the process exit
/// status. Usage errors exit with status 2 before this returns.
pub fn run() -> i32 {
    let cli = args::Cli::parse();
    match commands::dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}
