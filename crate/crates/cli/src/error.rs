use std::path::PathBuf;

use thiserror::Error;

/// Failure of a CLI command, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("cannot parse {path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("optimizer did not converge within the iteration limit")]
    NoConvergence,
    #[error("verification failed: {0} propert{s} out of tolerance", s = if *.0 == 1 { "y" } else { "ies" })]
    VerificationFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Parse { .. } | CliError::Write { .. } => 1,
            CliError::Validation(_) | CliError::VerificationFailed(_) => 2,
            CliError::NoConvergence => 3,
        }
    }
}

impl From<chsh_core::Error> for CliError {
    fn from(e: chsh_core::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}
