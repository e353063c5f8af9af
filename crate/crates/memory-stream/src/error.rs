//! Error type for stream operations.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MemoryError {
    /// Retrieval from a stream with no entries.
    #[error("cannot retrieve from an empty memory stream")]
    EmptyStream,
    #[error("memory log io: {0}")]
    IoError(#[from] std::io::Error),
    /// A persisted line failed to parse or violated an entry invariant.
    #[error("corrupt memory record at line {line}: {reason}")]
    CorruptRecord { line: usize, reason: String },
}
