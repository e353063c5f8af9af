//! Integer coordinates projecting a cube state onto the small quantities the
//! searches prune on, plus encode/decode helpers for table construction.
//!
//! Move indices follow the engine's face-turn order,
//! `face.index() * 3 + (turns - 1)`, and all arrays are read in the engine's
//! reference orientation (the caller strips the frame; accessors already
//! return reference-orientation arrays).

use cube_core::{CubieState, FACES};

/// Distinguishable corner orientation vectors; the eighth twist is fixed by
/// the other seven.
pub(crate) const TWIST_COUNT: usize = 2187;
/// Distinguishable edge orientation vectors; the twelfth flip is fixed by the
/// other eleven.
pub(crate) const FLIP_COUNT: usize = 2048;
/// Placements of the four equator edges among the twelve slots, ignoring
/// order: C(12, 4).
pub(crate) const SLICE_SET_COUNT: usize = 495;
/// Permutations of the eight corners.
pub(crate) const CORNER_PERM_COUNT: usize = 40320;
/// Permutations of the eight top/bottom edges within the top/bottom slots.
pub(crate) const OUTER_EDGE_PERM_COUNT: usize = 40320;
/// Permutations of the four equator edges within the equator slots.
pub(crate) const SLICE_PERM_COUNT: usize = 24;

/// All face turns, in move-index order.
pub(crate) const MOVE_COUNT: usize = 18;

/// Move indices that keep the reduced second-phase space closed: any turn of
/// the top and bottom faces, half turns of the rest.
pub(crate) const SECOND_PHASE_MOVES: [usize; 10] = [0, 1, 2, 9, 10, 11, 4, 7, 13, 16];

/// Piece arrays without frame bookkeeping, for coordinate work. The fields
/// follow the engine's replaced-by convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct RawState {
    pub cp: [u8; 8],
    pub co: [u8; 8],
    pub ep: [u8; 12],
    pub eo: [u8; 12],
}

impl RawState {
    pub(crate) const SOLVED: RawState = RawState {
        cp: [0, 1, 2, 3, 4, 5, 6, 7],
        co: [0; 8],
        ep: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        eo: [0; 12],
    };

    pub(crate) fn of(state: &CubieState) -> RawState {
        RawState {
            cp: state.corner_perm(),
            co: state.corner_orient(),
            ep: state.edge_perm(),
            eo: state.edge_orient(),
        }
    }

    /// `self` followed by `action`, the same composition law the engine uses.
    pub(crate) fn then(&self, action: &RawState) -> RawState {
        let mut out = RawState::SOLVED;
        for j in 0..8 {
            let from = action.cp[j] as usize;
            out.cp[j] = self.cp[from];
            out.co[j] = (self.co[from] + action.co[j]) % 3;
        }
        for j in 0..12 {
            let from = action.ep[j] as usize;
            out.ep[j] = self.ep[from];
            out.eo[j] = self.eo[from] ^ action.eo[j];
        }
        out
    }
}

/// The 18 face turns as raw piece actions, indexed by move index.
pub(crate) fn face_turn_actions() -> [RawState; 18] {
    let mut out = [RawState::SOLVED; 18];
    for face in FACES {
        for turns in 1..=3u8 {
            let state = CubieState::identity().apply_face_turn(face, turns);
            out[face.index() * 3 + (turns - 1) as usize] = RawState::of(&state);
        }
    }
    out
}

pub(crate) fn twist_index(s: &RawState) -> usize {
    s.co[..7].iter().fold(0, |acc, &c| acc * 3 + c as usize)
}

pub(crate) fn flip_index(s: &RawState) -> usize {
    s.eo[..11].iter().fold(0, |acc, &e| acc * 2 + e as usize)
}

/// C(n, k) for n <= 12, k <= 4.
const BINOM: [[usize; 5]; 13] = {
    let mut t = [[0usize; 5]; 13];
    let mut n = 0;
    while n < 13 {
        t[n][0] = 1;
        let mut k = 1;
        while k < 5 {
            t[n][k] = if k > n {
                0
            } else if k == n {
                1
            } else {
                t[n - 1][k - 1] + t[n - 1][k]
            };
            k += 1;
        }
        n += 1;
    }
    t
};

/// Colex rank of the set of slots holding equator edges. The home placement
/// (slots 8..12) ranks 494.
pub(crate) fn slice_set_index(s: &RawState) -> usize {
    let mut idx = 0;
    let mut seen = 0;
    for slot in 0..12 {
        if s.ep[slot] >= 8 {
            seen += 1;
            idx += BINOM[slot][seen];
        }
    }
    idx
}

pub(crate) const SLICE_SET_HOME: usize = 494;

pub(crate) fn perm_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let mut smaller = 0;
        for j in (i + 1)..n {
            if p[j] < p[i] {
                smaller += 1;
            }
        }
        rank = rank * (n - i) + smaller;
    }
    rank
}

pub(crate) fn perm_unrank(mut rank: usize, out: &mut [u8]) {
    let n = out.len();
    let mut digits = [0usize; 12];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut pool: Vec<u8> = (0..n as u8).collect();
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = pool.remove(digits[i]);
    }
}

pub(crate) fn corner_perm_index(s: &RawState) -> usize {
    perm_rank(&s.cp)
}

/// Rank of the top/bottom edges within slots 0..8. Only meaningful when the
/// equator edges are home, as in every second-phase state.
pub(crate) fn outer_edge_perm_index(s: &RawState) -> usize {
    debug_assert!(s.ep[..8].iter().all(|&p| p < 8));
    perm_rank(&s.ep[..8])
}

pub(crate) fn slice_perm_index(s: &RawState) -> usize {
    debug_assert!(s.ep[8..].iter().all(|&p| p >= 8));
    let q = [
        s.ep[8] - 8,
        s.ep[9] - 8,
        s.ep[10] - 8,
        s.ep[11] - 8,
    ];
    perm_rank(&q)
}

// Stage configurations: positions and orientations of four tracked pieces,
// packed as base-24 digits (slot * orient_base + orientation). The tracked
// sets are the bottom-layer edges, the bottom-layer corners, and the equator
// edges, pieces 4..8, 4..8, and 8..12 respectively.

fn edge_positions(s: &RawState) -> [u8; 12] {
    let mut pos = [0u8; 12];
    for (slot, &piece) in s.ep.iter().enumerate() {
        pos[piece as usize] = slot as u8;
    }
    pos
}

fn corner_positions(s: &RawState) -> [u8; 8] {
    let mut pos = [0u8; 8];
    for (slot, &piece) in s.cp.iter().enumerate() {
        pos[piece as usize] = slot as u8;
    }
    pos
}

fn edge_config(s: &RawState, pieces: [usize; 4]) -> usize {
    let pos = edge_positions(s);
    let mut idx = 0;
    for &p in pieces.iter().rev() {
        let slot = pos[p] as usize;
        idx = idx * 24 + (slot * 2 + s.eo[slot] as usize);
    }
    idx
}

pub(crate) fn bottom_edge_config(s: &RawState) -> usize {
    edge_config(s, [4, 5, 6, 7])
}

pub(crate) fn equator_edge_config(s: &RawState) -> usize {
    edge_config(s, [8, 9, 10, 11])
}

pub(crate) fn bottom_corner_config(s: &RawState) -> usize {
    let pos = corner_positions(s);
    let mut idx = 0;
    for p in (4..8).rev() {
        let slot = pos[p] as usize;
        idx = idx * 24 + (slot * 3 + s.co[slot] as usize);
    }
    idx
}

/// Piece sets for the mixed helper tables: two edges and two corners each,
/// pairing pieces whose insertions interact. The first two specs pair cross
/// edges with first-layer corners; the rest pair middle-layer edges with the
/// corners flanking their slots.
pub(crate) const MIXED_SPECS: [([usize; 2], [usize; 2]); 6] = [
    ([4, 5], [6, 7]),
    ([6, 7], [4, 5]),
    ([8, 9], [4, 5]),
    ([10, 11], [6, 7]),
    ([8, 11], [4, 7]),
    ([9, 10], [5, 6]),
];

/// Where every piece sits, gathered in one pass so a search node can
/// assemble several table indices without rescanning the state.
pub(crate) struct Placement {
    edge_digit: [usize; 12],
    corner_digit: [usize; 8],
}

pub(crate) fn placement(s: &RawState) -> Placement {
    let mut edge_digit = [0usize; 12];
    for (slot, &piece) in s.ep.iter().enumerate() {
        edge_digit[piece as usize] = slot * 2 + s.eo[slot] as usize;
    }
    let mut corner_digit = [0usize; 8];
    for (slot, &piece) in s.cp.iter().enumerate() {
        corner_digit[piece as usize] = slot * 3 + s.co[slot] as usize;
    }
    Placement { edge_digit, corner_digit }
}

impl Placement {
    pub(crate) fn edge_quad(&self, pieces: [usize; 4]) -> usize {
        let d = &self.edge_digit;
        d[pieces[0]] + 24 * (d[pieces[1]] + 24 * (d[pieces[2]] + 24 * d[pieces[3]]))
    }

    pub(crate) fn corner_quad(&self) -> usize {
        let d = &self.corner_digit;
        d[4] + 24 * (d[5] + 24 * (d[6] + 24 * d[7]))
    }

    pub(crate) fn mixed(&self, spec: usize) -> usize {
        let (edges, corners) = MIXED_SPECS[spec];
        self.edge_digit[edges[0]]
            + 24 * (self.edge_digit[edges[1]]
                + 24 * (self.corner_digit[corners[0]] + 24 * self.corner_digit[corners[1]]))
    }
}

// Representative states for table building. Only the encoded quantity is
// meaningful; every other field stays solved, so each coordinate's transition
// depends only on the coordinate itself.

pub(crate) fn twist_rep(idx: usize) -> RawState {
    let mut s = RawState::SOLVED;
    let mut rem = idx;
    let mut sum = 0u8;
    for i in (0..7).rev() {
        s.co[i] = (rem % 3) as u8;
        sum = (sum + s.co[i]) % 3;
        rem /= 3;
    }
    s.co[7] = (3 - sum) % 3;
    s
}

pub(crate) fn flip_rep(idx: usize) -> RawState {
    let mut s = RawState::SOLVED;
    let mut rem = idx;
    let mut sum = 0u8;
    for i in (0..11).rev() {
        s.eo[i] = (rem % 2) as u8;
        sum ^= s.eo[i];
        rem /= 2;
    }
    s.eo[11] = sum;
    s
}

pub(crate) fn slice_set_rep(idx: usize) -> RawState {
    let mut rem = idx;
    let mut in_slice = [false; 12];
    let mut slot = 11usize;
    for k in (1..=4).rev() {
        while BINOM[slot][k] > rem {
            slot -= 1;
        }
        in_slice[slot] = true;
        rem -= BINOM[slot][k];
        slot = slot.saturating_sub(1);
    }
    let mut s = RawState::SOLVED;
    let mut slice_piece = 8u8;
    let mut outer_piece = 0u8;
    for (i, &hit) in in_slice.iter().enumerate() {
        if hit {
            s.ep[i] = slice_piece;
            slice_piece += 1;
        } else {
            s.ep[i] = outer_piece;
            outer_piece += 1;
        }
    }
    s
}

pub(crate) fn corner_perm_rep(idx: usize) -> RawState {
    let mut s = RawState::SOLVED;
    perm_unrank(idx, &mut s.cp);
    s
}

pub(crate) fn outer_edge_perm_rep(idx: usize) -> RawState {
    let mut s = RawState::SOLVED;
    perm_unrank(idx, &mut s.ep[..8]);
    s
}

pub(crate) fn slice_perm_rep(idx: usize) -> RawState {
    let mut s = RawState::SOLVED;
    let mut q = [0u8; 4];
    perm_unrank(idx, &mut q);
    for i in 0..4 {
        s.ep[8 + i] = q[i] + 8;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_round_trip() {
        for idx in [0, 1, 1000, TWIST_COUNT - 1] {
            assert_eq!(twist_index(&twist_rep(idx)), idx);
        }
        for idx in [0, 1, 999, FLIP_COUNT - 1] {
            assert_eq!(flip_index(&flip_rep(idx)), idx);
        }
        for idx in 0..SLICE_SET_COUNT {
            assert_eq!(slice_set_index(&slice_set_rep(idx)), idx);
        }
        for idx in [0, 1, 5039, CORNER_PERM_COUNT - 1] {
            assert_eq!(corner_perm_index(&corner_perm_rep(idx)), idx);
        }
        for idx in 0..SLICE_PERM_COUNT {
            assert_eq!(slice_perm_index(&slice_perm_rep(idx)), idx);
        }
        assert_eq!(outer_edge_perm_index(&outer_edge_perm_rep(12345)), 12345);
    }

    #[test]
    fn solved_state_sits_at_the_goal_coordinates() {
        let s = RawState::SOLVED;
        assert_eq!(twist_index(&s), 0);
        assert_eq!(flip_index(&s), 0);
        assert_eq!(slice_set_index(&s), SLICE_SET_HOME);
        assert_eq!(corner_perm_index(&s), 0);
        assert_eq!(outer_edge_perm_index(&s), 0);
        assert_eq!(slice_perm_index(&s), 0);
    }

    #[test]
    fn raw_composition_matches_the_engine() {
        let actions = face_turn_actions();
        let mut raw = RawState::SOLVED;
        let mut state = CubieState::identity();
        // Fixed walk mixing every face and turn count.
        for (face, turns) in [(0, 1), (2, 3), (1, 2), (5, 1), (3, 3), (4, 2), (0, 2), (2, 1)] {
            raw = raw.then(&actions[face * 3 + (turns - 1)]);
            state = state.apply_face_turn(cube_core::Face::from_index(face), turns as u8);
        }
        assert_eq!(raw, RawState::of(&state));
    }
}
