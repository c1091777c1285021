use std::io;

use thiserror::Error;

/// Process exit status for a failed run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Domain = 1,
    Numerical = 2,
    Io = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("schema mismatch: {0}")]
    Schema(String),

    #[error(transparent)]
    Core(#[from] hyperzeta_core::Error),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    pub fn io(context: impl Into<String>, source: io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Usage(_) | CliError::Schema(_) => ExitStatus::Domain,
            CliError::Core(e) if e.is_numerical() => ExitStatus::Numerical,
            CliError::Core(_) => ExitStatus::Domain,
            CliError::Io { .. } => ExitStatus::Io,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        if e.is_io_error() {
            match e.into_kind() {
                csv::ErrorKind::Io(source) => CliError::io("csv", source),
                _ => unreachable!(),
            }
        } else {
            CliError::Schema(e.to_string())
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            CliError::io("json", io::Error::from(e))
        } else {
            CliError::Schema(e.to_string())
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
