use std::path::PathBuf;

use chern_seifert::{Error, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed phase file {path}: {reason}")]
    PhaseFile { path: PathBuf, reason: String },
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error("{0}")]
    Output(String),
    #[error("{failed} of {total} checks failed; first failure: {first}")]
    ChecksFailed {
        failed: usize,
        total: usize,
        first: String,
    },
    #[error("{0} catalog rows failed")]
    CatalogRows(usize),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => CliError::Parse(p),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    /// 2 parse error, 3 vanishing Chern number, 4 phase-file mismatch, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::PhaseFile { .. } | CliError::Usage(_) => 2,
            CliError::Core(Error::ZeroChernNumber) => 3,
            CliError::Core(Error::PhaseMismatch(_)) => 4,
            _ => 1,
        }
    }
}
