//! Batch runner, report emitter and expression evaluator for `boson-hopf`.

pub mod config;
pub mod eval;
pub mod grid;
pub mod output;
pub mod runner;

use thiserror::Error;

/// Errors that stop a command before any check runs.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("config: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("config: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] boson_hopf::Error),
    #[error("cannot write report: {0}")]
    Output(String),
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }
}

/// Exit status for a usage or configuration error.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when at least one check failed.
pub const EXIT_FAILURE: i32 = 1;
