//! Command-line front end: graph ingestion, per-graph reports, witnesses,
//! and restartable corpus surveys.

pub mod classify;
pub mod config;
pub mod input;
pub mod survey;
pub mod witness;

use thiserror::Error;

pub use config::Config;
pub use input::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input: {0}")]
    Input(String),
    #[error("unsupported request: {0}")]
    Unsupported(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
