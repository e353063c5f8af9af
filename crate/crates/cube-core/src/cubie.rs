use crate::error::CubeError;
use crate::frame::Frame;
use crate::moves::{Face, Move, MoveTarget};
use crate::notation::Algorithm;
use crate::predicate::StagePredicate;

// Corner slots, named by their three adjacent faces:
//   0 URF  1 UFL  2 ULB  3 UBR  4 DFR  5 DLF  6 DBL  7 DRB
// Edge slots:
//   0 UR  1 UF  2 UL  3 UB  4 DR  5 DF  6 DL  7 DB  8 FR  9 FL  10 BL  11 BR
//
// Permutations are stored in "replaced by" form: `cp[i]` is the piece now
// sitting in slot `i`. Corner orientation counts clockwise twists of the
// U/D-colored sticker away from the U/D axis; edge orientation is the usual
// flip parity under which only F and B quarter turns flip.

pub(crate) const CORNER_COUNT: usize = 8;
pub(crate) const EDGE_COUNT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Arrays {
    pub cp: [u8; CORNER_COUNT],
    pub co: [u8; CORNER_COUNT],
    pub ep: [u8; EDGE_COUNT],
    pub eo: [u8; EDGE_COUNT],
}

pub(crate) const SOLVED: Arrays = Arrays {
    cp: [0, 1, 2, 3, 4, 5, 6, 7],
    co: [0; 8],
    ep: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
    eo: [0; 12],
};

// One clockwise quarter turn per face, U R F D L B.
const QUARTER_TURNS: [Arrays; 6] = [
    Arrays {
        cp: [3, 0, 1, 2, 4, 5, 6, 7],
        co: [0; 8],
        ep: [3, 0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11],
        eo: [0; 12],
    },
    Arrays {
        cp: [4, 1, 2, 0, 7, 5, 6, 3],
        co: [2, 0, 0, 1, 1, 0, 0, 2],
        ep: [8, 1, 2, 3, 11, 5, 6, 7, 4, 9, 10, 0],
        eo: [0; 12],
    },
    Arrays {
        cp: [1, 5, 2, 3, 0, 4, 6, 7],
        co: [1, 2, 0, 0, 2, 1, 0, 0],
        ep: [0, 9, 2, 3, 4, 8, 6, 7, 1, 5, 10, 11],
        eo: [0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0],
    },
    Arrays {
        cp: [0, 1, 2, 3, 5, 6, 7, 4],
        co: [0; 8],
        ep: [0, 1, 2, 3, 5, 6, 7, 4, 8, 9, 10, 11],
        eo: [0; 12],
    },
    Arrays {
        cp: [0, 2, 6, 3, 4, 1, 5, 7],
        co: [0, 1, 2, 0, 0, 2, 1, 0],
        ep: [0, 1, 10, 3, 4, 5, 9, 7, 8, 2, 6, 11],
        eo: [0; 12],
    },
    Arrays {
        cp: [0, 1, 3, 7, 4, 5, 2, 6],
        co: [0, 0, 1, 2, 0, 0, 2, 1],
        ep: [0, 1, 2, 11, 4, 5, 6, 10, 8, 9, 3, 7],
        eo: [0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1],
    },
];

const fn compose(a: &Arrays, b: &Arrays) -> Arrays {
    let mut out = SOLVED;
    let mut i = 0;
    while i < CORNER_COUNT {
        let src = b.cp[i] as usize;
        out.cp[i] = a.cp[src];
        out.co[i] = (a.co[src] + b.co[i]) % 3;
        i += 1;
    }
    let mut i = 0;
    while i < EDGE_COUNT {
        let src = b.ep[i] as usize;
        out.ep[i] = a.ep[src];
        out.eo[i] = (a.eo[src] + b.eo[i]) % 2;
        i += 1;
    }
    out
}

// All 18 face moves, indexed `face * 3 + (turns - 1)`, expanded from the
// quarter turns at compile time.
pub(crate) const FACE_MOVES: [Arrays; 18] = {
    let mut table = [SOLVED; 18];
    let mut f = 0;
    while f < 6 {
        let q = QUARTER_TURNS[f];
        table[f * 3] = q;
        table[f * 3 + 1] = compose(&q, &q);
        table[f * 3 + 2] = compose(&compose(&q, &q), &q);
        f += 1;
    }
    table
};

/// Cubie-level cube state: piece permutations and orientations for corners
/// and edges, plus the frame orientation accumulated from whole-cube
/// rotations. Only reachable states can be constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubieState {
    cp: [u8; CORNER_COUNT],
    co: [u8; CORNER_COUNT],
    ep: [u8; EDGE_COUNT],
    eo: [u8; EDGE_COUNT],
    frame: Frame,
}

impl CubieState {
    /// The solved state in the reference orientation.
    pub fn identity() -> CubieState {
        CubieState::from_arrays(SOLVED, Frame::IDENTITY)
    }

    pub(crate) fn from_arrays(a: Arrays, frame: Frame) -> CubieState {
        CubieState { cp: a.cp, co: a.co, ep: a.ep, eo: a.eo, frame }
    }

    pub(crate) fn arrays(&self) -> Arrays {
        Arrays { cp: self.cp, co: self.co, ep: self.ep, eo: self.eo }
    }

    /// Builds a state from explicit piece arrays (reference orientation),
    /// rejecting anything no move sequence reaches.
    pub fn from_parts(
        cp: [u8; 8],
        co: [u8; 8],
        ep: [u8; 12],
        eo: [u8; 12],
    ) -> Result<CubieState, CubeError> {
        let arrays = Arrays { cp, co, ep, eo };
        validate(&arrays)?;
        Ok(CubieState::from_arrays(arrays, Frame::IDENTITY))
    }

    pub fn corner_perm(&self) -> [u8; 8] {
        self.cp
    }

    pub fn corner_orient(&self) -> [u8; 8] {
        self.co
    }

    pub fn edge_perm(&self) -> [u8; 12] {
        self.ep
    }

    pub fn edge_orient(&self) -> [u8; 12] {
        self.eo
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// Applies one alphabet token. Face moves are relabeled through the
    /// current frame and composed into the piece arrays; axis moves only
    /// advance the frame.
    pub fn apply_move(&self, mv: Move) -> CubieState {
        match mv.target() {
            MoveTarget::Face(face) => {
                let underlying = self.frame.face_of(face);
                let table = &FACE_MOVES[underlying.index() * 3 + (mv.turns() - 1) as usize];
                CubieState::from_arrays(compose(&self.arrays(), table), self.frame)
            }
            MoveTarget::Axis(axis) => {
                let mut next = *self;
                next.frame = self.frame.then_axis(axis, mv.turns());
                next
            }
        }
    }

    pub fn apply_algorithm(&self, alg: &Algorithm) -> CubieState {
        let mut state = *self;
        for &mv in alg.moves() {
            state = state.apply_move(mv);
        }
        state
    }

    /// True when every piece is home and untwisted. Whole-cube orientation is
    /// ignored: a solved cube stays solved when rotated in the hand.
    pub fn is_solved(&self) -> bool {
        self.arrays() == SOLVED
    }

    pub fn stage_satisfied(&self, predicate: StagePredicate) -> bool {
        predicate.satisfied(self)
    }

    /// True when the piece arrays match, ignoring frame orientation: the two
    /// states show the same sticker pattern, possibly rotated in space.
    pub fn same_pattern(&self, other: &CubieState) -> bool {
        self.arrays() == other.arrays()
    }
}

/// Solvability check: permutations must be bijections, twist must vanish
/// mod 3, flip mod 2, and corner/edge permutation parities must agree.
pub(crate) fn validate(a: &Arrays) -> Result<(), CubeError> {
    let mut seen = [false; CORNER_COUNT];
    for (i, &p) in a.cp.iter().enumerate() {
        if p as usize >= CORNER_COUNT || seen[p as usize] {
            return Err(CubeError::UnsolvableState(format!(
                "corner slot {i} does not hold a unique corner piece"
            )));
        }
        seen[p as usize] = true;
        if a.co[i] > 2 {
            return Err(CubeError::UnsolvableState(format!(
                "corner orientation {} out of range at slot {i}",
                a.co[i]
            )));
        }
    }
    let mut seen = [false; EDGE_COUNT];
    for (i, &p) in a.ep.iter().enumerate() {
        if p as usize >= EDGE_COUNT || seen[p as usize] {
            return Err(CubeError::UnsolvableState(format!(
                "edge slot {i} does not hold a unique edge piece"
            )));
        }
        seen[p as usize] = true;
        if a.eo[i] > 1 {
            return Err(CubeError::UnsolvableState(format!(
                "edge orientation {} out of range at slot {i}",
                a.eo[i]
            )));
        }
    }
    let twist: u32 = a.co.iter().map(|&c| c as u32).sum();
    if twist % 3 != 0 {
        return Err(CubeError::UnsolvableState(
            "total corner twist is not a multiple of 3".into(),
        ));
    }
    let flip: u32 = a.eo.iter().map(|&e| e as u32).sum();
    if flip % 2 != 0 {
        return Err(CubeError::UnsolvableState("total edge flip is odd".into()));
    }
    if permutation_parity(&a.cp) != permutation_parity(&a.ep) {
        return Err(CubeError::UnsolvableState(
            "corner and edge permutation parities disagree".into(),
        ));
    }
    Ok(())
}

fn permutation_parity(perm: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Conserved quantities useful for property checks: total twist mod 3, total
/// flip mod 2, and the two permutation parities.
pub fn conserved_quantities(state: &CubieState) -> (u32, u32, bool, bool) {
    let a = state.arrays();
    (
        a.co.iter().map(|&c| c as u32).sum::<u32>() % 3,
        a.eo.iter().map(|&e| e as u32).sum::<u32>() % 2,
        permutation_parity(&a.cp),
        permutation_parity(&a.ep),
    )
}

// Face turns used directly by solver search loops, bypassing `Move`
// construction but honoring the frame like `apply_move`.
impl CubieState {
    pub fn apply_face_turn(&self, face: Face, turns: u8) -> CubieState {
        debug_assert!((1..=3).contains(&turns));
        let underlying = self.frame.face_of(face);
        let table = &FACE_MOVES[underlying.index() * 3 + (turns - 1) as usize];
        CubieState::from_arrays(compose(&self.arrays(), table), self.frame)
    }
}
