//! Exact shortest-solution search with a hard depth cap.

use cube_core::CubieState;

use crate::coords::{corner_perm_index, flip_index, twist_index, RawState, MOVE_COUNT};
use crate::tables::{tables, Tables};

/// Outcome of the bounded exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimalLength {
    /// The true shortest face-turn solution length, at most the cap.
    Exact(u8),
    /// Every solution is longer than the cap.
    AboveCap,
}

/// Finds the exact shortest face-turn solution length, or reports
/// [`OptimalLength::AboveCap`] when it exceeds `depth_cap`.
///
/// The cap may not exceed 12: beyond that the search would need stronger
/// tables than this crate carries, so deeper requests are a caller bug.
pub fn optimal_length_bounded(state: &CubieState, depth_cap: u8) -> OptimalLength {
    assert!(
        depth_cap <= 12,
        "depth cap {depth_cap} exceeds the supported maximum of 12"
    );
    let raw = RawState::of(state);
    if raw == RawState::SOLVED {
        return OptimalLength::Exact(0);
    }
    let t = tables();
    let mut search = Search { t, stack: Vec::with_capacity(depth_cap as usize), start: raw };
    let (tw, fl, cp) = (twist_index(&raw), flip_index(&raw), corner_perm_index(&raw));
    for bound in 1..=depth_cap {
        if search.dfs(tw, fl, cp, bound, NO_FACE) {
            return OptimalLength::Exact(bound);
        }
    }
    OptimalLength::AboveCap
}

// Root sentinel for "no previous move". Must be out of reach of the child
// filter: faces run 0..6 and `face + 3` runs 3..9, so 9 matches neither.
const NO_FACE: usize = 9;

struct Search<'a> {
    t: &'a Tables,
    stack: Vec<usize>,
    start: RawState,
}

impl Search<'_> {
    /// Depth-first to exactly `left` more moves, pruning on the best of the
    /// three coordinate bounds. The coordinates cannot distinguish edge
    /// permutations, so a leaf that reaches all three goals is confirmed by
    /// replaying the move stack on the full state.
    fn dfs(&mut self, twist: usize, flip: usize, cperm: usize, left: u8, last_face: usize) -> bool {
        let p = &self.t.pruning;
        let bound = p
            .twist_at(twist)
            .max(p.flip_at(flip))
            .max(p.corner_perm_at(cperm));
        if bound > left {
            return false;
        }
        if left == 0 {
            return self.replay_is_solved();
        }
        for face in 0..6 {
            // Never twist the same face twice in a row, and explore each
            // commuting opposite-face pair in one fixed order only.
            if face == last_face || face + 3 == last_face {
                continue;
            }
            for turns in 1..=3usize {
                let m = face * 3 + turns - 1;
                let nt = self.t.moves.twist[twist * MOVE_COUNT + m] as usize;
                let nf = self.t.moves.flip[flip * MOVE_COUNT + m] as usize;
                let nc = self.t.moves.corner_perm[cperm * MOVE_COUNT + m] as usize;
                self.stack.push(m);
                if self.dfs(nt, nf, nc, left - 1, face) {
                    return true;
                }
                self.stack.pop();
            }
        }
        false
    }

    fn replay_is_solved(&self) -> bool {
        let mut s = self.start;
        for &m in &self.stack {
            s = s.then(&self.t.actions[m]);
        }
        s == RawState::SOLVED
    }
}
