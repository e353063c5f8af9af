use std::sync::LazyLock;

use crate::moves::{Axis, Face, FACES};

/// One of the 24 rigid orientations of the cube, identified by a small index.
/// Index 0 is the reference orientation. A frame maps each spatial face slot
/// (the direction an observer calls "U", "R", ...) to the underlying face of
/// the rotation-normalized state currently pointing that way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frame(u8);

struct FrameData {
    /// `face_map[d]` = underlying face shown at spatial slot `d`.
    face_map: [Face; 6],
    /// Sticker relabeling: `view[i] = normalized[perm[i]]`.
    perm: [u8; 54],
}

struct FrameTables {
    frames: Vec<FrameData>,
    /// `step[frame][axis][turns - 1]` = frame after one more axis move.
    step: [[[u8; 3]; 3]; 24],
    /// `inv_face_map[frame][underlying]` = spatial slot showing that face.
    inv_face_map: [[Face; 6]; 24],
}

// Sticker index permutations for one x / y whole-cube rotation, in
// "where did the sticker now at position i come from" form. Index layout is
// the facelet layout: U 0..9, R 9..18, F 18..27, D 27..36, L 36..45, B 45..54,
// row-major per face. Derived from the sticker geometry; the geometric oracle
// test re-derives them independently.
#[rustfmt::skip]
const X_PERM: [u8; 54] = [
    18, 19, 20, 21, 22, 23, 24, 25, 26, // U <- F
    15, 12,  9, 16, 13, 10, 17, 14, 11, // R rotates in-plane clockwise
    27, 28, 29, 30, 31, 32, 33, 34, 35, // F <- D
    53, 52, 51, 50, 49, 48, 47, 46, 45, // D <- B, reversed
    38, 41, 44, 37, 40, 43, 36, 39, 42, // L rotates in-plane counterclockwise
     8,  7,  6,  5,  4,  3,  2,  1,  0, // B <- U, reversed
];

#[rustfmt::skip]
const Y_PERM: [u8; 54] = [
     6,  3,  0,  7,  4,  1,  8,  5,  2, // U rotates in-plane clockwise
    45, 46, 47, 48, 49, 50, 51, 52, 53, // R <- B
     9, 10, 11, 12, 13, 14, 15, 16, 17, // F <- R
    29, 32, 35, 28, 31, 34, 27, 30, 33, // D rotates in-plane counterclockwise
    18, 19, 20, 21, 22, 23, 24, 25, 26, // L <- F
    36, 37, 38, 39, 40, 41, 42, 43, 44, // B <- L
];

fn compose(a: &[u8; 54], b: &[u8; 54]) -> [u8; 54] {
    let mut out = [0u8; 54];
    for i in 0..54 {
        out[i] = a[b[i] as usize];
    }
    out
}

fn face_map_of(perm: &[u8; 54]) -> [Face; 6] {
    let mut map = [Face::U; 6];
    for d in 0..6 {
        let center = perm[9 * d + 4] as usize;
        debug_assert_eq!(center % 9, 4);
        map[d] = Face::from_index(center / 9);
    }
    map
}

static TABLES: LazyLock<FrameTables> = LazyLock::new(|| {
    // z = y' x y as a sticker permutation; building it from the generators
    // avoids hand-deriving a third table.
    let y_inv = compose(&Y_PERM, &compose(&Y_PERM, &Y_PERM));
    let z_perm = compose(&compose(&y_inv, &X_PERM), &Y_PERM);
    let generators = [X_PERM, Y_PERM, z_perm];

    let mut frames: Vec<FrameData> = Vec::with_capacity(24);
    let mut identity = [0u8; 54];
    for (i, slot) in identity.iter_mut().enumerate() {
        *slot = i as u8;
    }
    frames.push(FrameData { face_map: face_map_of(&identity), perm: identity });

    // Closure under the generators; x and y alone span all 24 orientations,
    // z is included so stepping by any axis is a direct lookup.
    let mut i = 0;
    while i < frames.len() {
        let current = frames[i].perm;
        for gen in &generators {
            let next = compose(&current, gen);
            let map = face_map_of(&next);
            if !frames.iter().any(|f| f.face_map == map) {
                frames.push(FrameData { face_map: map, perm: next });
            }
        }
        i += 1;
    }
    assert_eq!(frames.len(), 24, "rotation closure must have order 24");

    let find = |perm: &[u8; 54]| -> u8 {
        let map = face_map_of(perm);
        frames
            .iter()
            .position(|f| f.face_map == map)
            .expect("rotation closure is closed under composition") as u8
    };

    let mut step = [[[0u8; 3]; 3]; 24];
    let mut inv_face_map = [[Face::U; 6]; 24];
    for (fi, frame) in frames.iter().enumerate() {
        for (ai, gen) in generators.iter().enumerate() {
            let mut acc = frame.perm;
            for t in 0..3 {
                acc = compose(&acc, gen);
                step[fi][ai][t] = find(&acc);
            }
        }
        for d in FACES {
            inv_face_map[fi][frame.face_map[d.index()].index()] = d;
        }
    }

    FrameTables { frames, step, inv_face_map }
});

impl Frame {
    pub const IDENTITY: Frame = Frame(0);

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    /// Underlying face currently shown at spatial slot `face`.
    pub fn face_of(self, face: Face) -> Face {
        TABLES.frames[self.0 as usize].face_map[face.index()]
    }

    /// Spatial slot currently showing underlying face `face`.
    pub fn slot_showing(self, face: Face) -> Face {
        TABLES.inv_face_map[self.0 as usize][face.index()]
    }

    /// Frame after a whole-cube rotation about `axis` by `turns` quarter
    /// turns.
    pub fn then_axis(self, axis: Axis, turns: u8) -> Frame {
        debug_assert!((1..=3).contains(&turns));
        Frame(TABLES.step[self.0 as usize][axis.index()][(turns - 1) as usize])
    }

    /// Sticker relabeling of this orientation: entry `i` is the normalized
    /// sticker index shown at viewed position `i`.
    pub(crate) fn sticker_perm(self) -> &'static [u8; 54] {
        &TABLES.frames[self.0 as usize].perm
    }

    /// Frame whose face map equals `map`, if `map` is a rigid rotation.
    /// Mirrored or otherwise impossible center arrangements return `None`.
    pub(crate) fn from_face_map(map: &[Face; 6]) -> Option<Frame> {
        TABLES
            .frames
            .iter()
            .position(|f| &f.face_map == map)
            .map(|i| Frame(i as u8))
    }
}

impl Default for Frame {
    fn default() -> Self {
        Frame::IDENTITY
    }
}
