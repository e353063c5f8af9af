//! Seeded scramble generation.

use cube_core::{Algorithm, Face, Move, MoveTarget};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generates a scramble of exactly `length` face turns. Two consecutive
/// moves never turn the same face, and no three consecutive moves share an
/// axis, so rewriting the sequence to canonical form never shortens it.
/// The same seed always yields the same scramble.
pub fn scramble(seed: u64, length: usize) -> Algorithm {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut moves: Vec<Move> = Vec::with_capacity(length);
    while moves.len() < length {
        let face = Face::from_index(rng.gen_range(0..6));
        let turns = rng.gen_range(1..=3u8);
        if let Some(&prev) = moves.last() {
            let prev_face = face_of(prev);
            if prev_face == face {
                continue;
            }
            if moves.len() >= 2 {
                let before = face_of(moves[moves.len() - 2]);
                if before.axis_index() == prev_face.axis_index()
                    && prev_face.axis_index() == face.axis_index()
                {
                    continue;
                }
            }
        }
        moves.push(Move::face(face, turns));
    }
    Algorithm::new(moves)
}

fn face_of(mv: Move) -> Face {
    match mv.target() {
        MoveTarget::Face(face) => face,
        MoveTarget::Axis(_) => unreachable!("scrambles contain face turns only"),
    }
}
