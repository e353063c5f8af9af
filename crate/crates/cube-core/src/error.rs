use thiserror::Error;

/// Errors raised by state construction and predicate parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    /// The facelet string is not even a well-formed sticker description:
    /// wrong length, letter outside `URFDLB`, sticker counts other than nine
    /// per color, or duplicated face centers.
    #[error("malformed facelets: {0}")]
    MalformedFacelets(String),

    /// The facelet string is well-formed but names a configuration no legal
    /// move sequence reaches (bad cubie decomposition, mirrored centers,
    /// twist/flip/parity violation).
    #[error("unsolvable state: {0}")]
    UnsolvableState(String),

    /// A stage-predicate token outside the fixed vocabulary.
    #[error("unknown stage predicate `{0}`")]
    UnknownPredicate(String),
}
