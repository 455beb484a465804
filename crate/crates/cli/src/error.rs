use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: malformed state file: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{context}: {source}")]
    Invalid {
        context: String,
        source: hardy_core::Error,
    },
    #[error("{0}")]
    Format(String),
}

impl CliError {
    pub fn invalid(context: impl Into<String>, source: hardy_core::Error) -> Self {
        Self::Invalid {
            context: context.into(),
            source,
        }
    }
}
