//! The stream itself: entries, recording, scored retrieval, persistence.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::embed::{cosine, embed, EMBED_DIM};
use crate::error::MemoryError;

/// Per-tick decay of the recency score: an entry untouched for `d` ticks
/// contributes `RECENCY_DECAY^d` before normalization.
pub const RECENCY_DECAY: f64 = 0.995;

/// What produced an entry. Determines its default importance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MemoryKind {
    Observation,
    Reflection,
    Plan,
}

impl MemoryKind {
    /// Built-in importance rule: reflections carry the lessons, plans carry
    /// intent, routine observations are background.
    pub fn default_importance(self) -> u8 {
        match self {
            MemoryKind::Observation => 3,
            MemoryKind::Plan => 5,
            MemoryKind::Reflection => 8,
        }
    }
}

/// One logged experience.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MemoryObject {
    pub id: u64,
    pub description: String,
    pub kind: MemoryKind,
    /// Tick the entry was recorded at.
    pub created_at: u64,
    /// Tick the entry was last returned by retrieval (creation counts).
    pub last_accessed_at: u64,
    /// Weight in `1..=10`.
    pub importance: u8,
    /// Unit vector of dimension [`EMBED_DIM`].
    pub embedding: Vec<f64>,
}

/// Append-only log with a tick clock that advances once per recorded entry.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MemoryStream {
    objects: Vec<MemoryObject>,
    clock: u64,
}

impl MemoryStream {
    pub fn new() -> MemoryStream {
        MemoryStream::default()
    }

    /// The current tick: the creation time the next recorded entry will get.
    pub fn now(&self) -> u64 {
        self.clock
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MemoryObject> {
        self.objects.iter()
    }

    pub fn get(&self, id: u64) -> Option<&MemoryObject> {
        self.objects.iter().find(|o| o.id == id)
    }

    /// Appends a new entry stamped with the current tick and advances the
    /// clock. The description is embedded on the way in.
    ///
    /// # Panics
    /// If `importance` is outside `1..=10`.
    pub fn record(&mut self, description: &str, kind: MemoryKind, importance: u8) -> u64 {
        assert!((1..=10).contains(&importance), "importance {importance} outside 1..=10");
        let id = self.objects.iter().map(|o| o.id + 1).max().unwrap_or(0);
        let tick = self.clock;
        self.objects.push(MemoryObject {
            id,
            description: description.to_string(),
            kind,
            created_at: tick,
            last_accessed_at: tick,
            importance,
            embedding: embed(description),
        });
        self.clock += 1;
        id
    }

    /// Appends a fully specified entry, for rebuilding a stream from raw
    /// objects. The clock advances past the entry's creation tick.
    ///
    /// # Panics
    /// If the entry breaks a stream invariant; [`MemoryStream::load`] reports
    /// the same violations as errors instead.
    pub fn push(&mut self, object: MemoryObject) {
        if let Err(reason) = self.admissible(&object) {
            panic!("invalid memory object: {reason}");
        }
        self.clock = self.clock.max(object.created_at + 1);
        self.objects.push(object);
    }

    fn admissible(&self, object: &MemoryObject) -> Result<(), String> {
        if self.objects.iter().any(|o| o.id == object.id) {
            return Err(format!("duplicate id {}", object.id));
        }
        if let Some(last) = self.objects.last() {
            if object.created_at < last.created_at {
                return Err(format!(
                    "created_at {} precedes the previous entry's {}",
                    object.created_at, last.created_at
                ));
            }
        }
        if object.last_accessed_at < object.created_at {
            return Err(format!(
                "last_accessed_at {} precedes created_at {}",
                object.last_accessed_at, object.created_at
            ));
        }
        if !(1..=10).contains(&object.importance) {
            return Err(format!("importance {} outside 1..=10", object.importance));
        }
        if object.embedding.len() != EMBED_DIM {
            return Err(format!("embedding dimension {} != {EMBED_DIM}", object.embedding.len()));
        }
        let norm = object.embedding.iter().map(|v| v * v).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-6 {
            return Err(format!("embedding norm {norm} is not 1"));
        }
        Ok(())
    }

    /// Returns the `k` highest-scoring entries for the query at tick `now`
    /// and stamps each returned entry's `last_accessed_at` with `now`.
    ///
    /// Score is the sum of three min-max normalized components over the whole
    /// stream: recency `RECENCY_DECAY^(now - last_accessed_at)`, importance,
    /// and cosine relevance of the embedded query. A component that is
    /// constant across the stream normalizes to 1 for everyone. Ties go to
    /// the most recently created entry, then the larger id. Fewer than `k`
    /// entries returns them all.
    pub fn retrieve(
        &mut self,
        query: &str,
        k: usize,
        now: u64,
    ) -> Result<Vec<MemoryObject>, MemoryError> {
        assert!(k >= 1, "retrieval needs k >= 1");
        if self.objects.is_empty() {
            return Err(MemoryError::EmptyStream);
        }
        let q = embed(query);
        let recency: Vec<f64> = self
            .objects
            .iter()
            .map(|o| RECENCY_DECAY.powf(now.saturating_sub(o.last_accessed_at) as f64))
            .collect();
        let importance: Vec<f64> = self.objects.iter().map(|o| o.importance as f64).collect();
        let relevance: Vec<f64> =
            self.objects.iter().map(|o| cosine(&q, &o.embedding)).collect();

        let mut score = vec![0.0f64; self.objects.len()];
        for component in [&recency, &importance, &relevance] {
            let min = component.iter().copied().fold(f64::INFINITY, f64::min);
            let max = component.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            for (s, &v) in score.iter_mut().zip(component.iter()) {
                *s += if max > min { (v - min) / (max - min) } else { 1.0 };
            }
        }

        let mut order: Vec<usize> = (0..self.objects.len()).collect();
        order.sort_by(|&a, &b| {
            score[b]
                .total_cmp(&score[a])
                .then(self.objects[b].created_at.cmp(&self.objects[a].created_at))
                .then(self.objects[b].id.cmp(&self.objects[a].id))
        });
        order.truncate(k);

        let mut out = Vec::with_capacity(order.len());
        for idx in order {
            self.objects[idx].last_accessed_at = now;
            out.push(self.objects[idx].clone());
        }
        Ok(out)
    }

    /// Writes the stream as line-delimited JSON, one entry per line.
    pub fn persist(&self, path: &Path) -> Result<(), MemoryError> {
        let mut out = String::new();
        for object in &self.objects {
            out.push_str(&serde_json::to_string(object).expect("plain struct serializes"));
            out.push('\n');
        }
        fs::write(path, out)?;
        Ok(())
    }

    /// Reads a stream back from line-delimited JSON. Every line must parse
    /// and satisfy the entry invariants; the clock resumes after the newest
    /// creation tick.
    pub fn load(path: &Path) -> Result<MemoryStream, MemoryError> {
        let data = fs::read_to_string(path)?;
        let mut stream = MemoryStream::new();
        for (i, line) in data.lines().enumerate() {
            let object: MemoryObject = serde_json::from_str(line)
                .map_err(|e| MemoryError::CorruptRecord { line: i + 1, reason: e.to_string() })?;
            stream
                .admissible(&object)
                .map_err(|reason| MemoryError::CorruptRecord { line: i + 1, reason })?;
            stream.clock = stream.clock.max(object.created_at + 1);
            stream.objects.push(object);
        }
        Ok(stream)
    }
}
