//! File formats, bundled examples, certificate checking and rendering for
//! `arcdist-core`.

pub mod check;
pub mod corpus;
pub mod format;
pub mod render;

use arcdist_core::surface::TriangulationError;
use arcdist_core::Error;

/// Failures reported by the tool, each with its own exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read or write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("{0}")]
    Triangulation(#[from] TriangulationError),
    #[error("base mismatch: {0}")]
    BaseMismatch(String),
    #[error("invalid arc: {0}")]
    Arc(Error),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal error: {0}")]
    Internal(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Io { .. } => 3,
            CliError::Json(_) => 4,
            CliError::Schema(_) => 5,
            CliError::Triangulation(_) => 6,
            CliError::BaseMismatch(_) => 7,
            CliError::Arc(_) => 8,
            CliError::Internal(_) => 9,
        }
    }

    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Triangulation(t) => CliError::Triangulation(t),
            Error::BaseMismatch => CliError::BaseMismatch(e.to_string()),
            Error::OutOfRange
            | Error::Inconsistent { .. }
            | Error::Endpoints
            | Error::NotEmbedded => CliError::Arc(e),
            Error::EmptyShadowList
            | Error::InvalidSequence { .. }
            | Error::InvalidLevelPosition(_) => CliError::Schema(e.to_string()),
            Error::Postcondition("word is not reduced") => CliError::Arc(e),
            _ => CliError::Internal(e),
        }
    }
}
