//! An append-only experience log with scored retrieval.
//!
//! A [`MemoryStream`] records natural-language entries, each stamped with a
//! tick-based creation and last-access time, an importance weight, and a
//! deterministic text embedding. [`MemoryStream::retrieve`] ranks entries by
//! the sum of min-max normalized recency, importance, and relevance scores,
//! and touching an entry updates its access time, so frequently consulted
//! memories stay warm.
//!
//! Streams persist as line-delimited JSON, one entry per line, and round-trip
//! losslessly.

mod embed;
mod error;
mod stream;

pub use embed::{cosine, embed, EMBED_DIM};
pub use error::MemoryError;
pub use stream::{MemoryKind, MemoryObject, MemoryStream, RECENCY_DECAY};
