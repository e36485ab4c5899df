//! Command line front end for the `qwalk` simulator: single- and
//! two-walker experiments, reproduction of the published distance and
//! correlation tables, and the invariant verification suite.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 on an invariant
//! violation.

use std::fmt;

pub mod cli;
pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

pub use cli::run;

/// Command failures mapped onto process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or configuration (exit 1).
    Invalid(String),
    /// A computed distribution or check violated an invariant (exit 2).
    Invariant(String),
    /// Output could not be written (exit 1).
    Io(std::io::Error),
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError::Invalid(message.into())
    }

    pub fn invariant(message: impl Into<String>) -> Self {
        CliError::Invariant(message.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 1,
            CliError::Invariant(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(message) => write!(f, "{message}"),
            CliError::Invariant(message) => write!(f, "{message}"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for CliError {}
