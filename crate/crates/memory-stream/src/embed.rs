//! Deterministic text embeddings by feature hashing.

/// Dimension of every embedding vector.
pub const EMBED_DIM: usize = 256;

/// Maps text to a unit vector: lowercase, split on whitespace, hash each word
/// into one of [`EMBED_DIM`] buckets, then L2-normalize the bucket counts.
/// Same text, same vector, on every platform. Text with no words maps to a
/// fixed canonical unit vector instead of the unnormalizable zero vector.
pub fn embed(text: &str) -> Vec<f64> {
    let mut buckets = vec![0.0f64; EMBED_DIM];
    let mut any = false;
    for word in text.to_lowercase().split_whitespace() {
        buckets[fnv1a(word.as_bytes()) as usize % EMBED_DIM] += 1.0;
        any = true;
    }
    if !any {
        buckets[0] = 1.0;
        return buckets;
    }
    let norm = buckets.iter().map(|v| v * v).sum::<f64>().sqrt();
    for v in &mut buckets {
        *v /= norm;
    }
    buckets
}

/// Cosine similarity. Zero vectors compare as 0 rather than dividing by zero.
pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|v| v * v).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        0.0
    } else {
        dot / (na * nb)
    }
}

fn fnv1a(data: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in data {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100_0000_01b3);
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embeddings_are_deterministic_unit_vectors() {
        for text in ["rotate the up face", "R U R' U'", "", "   ", "one"] {
            let a = embed(text);
            let b = embed(text);
            assert_eq!(a, b);
            let norm = a.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-6, "norm {norm} for {text:?}");
        }
    }

    #[test]
    fn self_similarity_is_one() {
        let e = embed("turn the right face clockwise");
        assert!((cosine(&e, &e) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn near_paraphrases_beat_unrelated_text() {
        let query = embed("rotate up face");
        let close = embed("rotate the up face");
        let far = embed("white cross complete");
        assert!(cosine(&query, &close) > cosine(&query, &far));
    }

    #[test]
    fn case_is_ignored() {
        assert_eq!(embed("Rotate UP Face"), embed("rotate up face"));
    }

    #[test]
    fn empty_text_gets_the_canonical_vector() {
        let e = embed("");
        assert_eq!(e[0], 1.0);
        assert!(e[1..].iter().all(|&v| v == 0.0));
        assert_eq!(embed("\t \n"), e);
    }
}
