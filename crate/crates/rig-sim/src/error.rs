//! Error type for script execution, parsing, and state reconstruction.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RigError {
    /// A primitive was executed outside the grip discipline.
    #[error("script error at primitive {index}: {reason}")]
    ScriptError { index: usize, reason: String },
    /// A serialized script line failed to parse.
    #[error("malformed script line {line}: {reason}")]
    MalformedScript { line: usize, reason: String },
    /// Observations that cannot all describe one state.
    #[error("conflicting observations: {0}")]
    ConflictError(String),
}
