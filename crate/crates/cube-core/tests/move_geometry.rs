//! Cross-checks the move engine against an independent geometric model.
//!
//! The oracle here never consults the library's permutation tables. Each of
//! the 54 sticker positions is reconstructed as a 3D point from the
//! documented net layout, every move token becomes a signed quarter-turn
//! rotation of space applied to the points in its moving layer, and colors
//! are carried along. Agreement is then checked sticker-by-sticker through
//! the public facelet serialization.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use cube_core::{parse_algorithm, Axis, CubieState, Face, Move, AXES, FACES};

type V3 = [i32; 3];

/// Outward normal, page-downward row direction and page-rightward column
/// direction for each face of the unfolded net, in U R F D L B face order.
/// Axes: +x toward R, +y toward U, +z toward F.
///
/// These encode only the documented string layout: U is read with B at the
/// top, the middle band L F R B is read upright from each face's outside,
/// and D is read with F at the top.
const FACE_BASES: [(V3, V3, V3); 6] = [
    ([0, 1, 0], [0, 0, 1], [1, 0, 0]),   // U: rows B->F, cols L->R
    ([1, 0, 0], [0, -1, 0], [0, 0, -1]), // R: rows U->D, cols F->B
    ([0, 0, 1], [0, -1, 0], [1, 0, 0]),  // F: rows U->D, cols L->R
    ([0, -1, 0], [0, 0, -1], [1, 0, 0]), // D: rows F->B, cols L->R
    ([-1, 0, 0], [0, -1, 0], [0, 0, 1]), // L: rows U->D, cols B->F
    ([0, 0, -1], [0, -1, 0], [-1, 0, 0]), // B: rows U->D, cols R->L
];

fn add(a: V3, b: V3) -> V3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn scale(k: i32, v: V3) -> V3 {
    [k * v[0], k * v[1], k * v[2]]
}

fn dot(a: V3, b: V3) -> i32 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Center point of sticker index `i`: three grid units out along the face
/// normal, two units per grid step within the face.
fn sticker_center(i: usize) -> V3 {
    let (normal, row_dir, col_dir) = FACE_BASES[i / 9];
    let r = (i % 9) / 3;
    let c = i % 3;
    add(
        scale(3, normal),
        add(scale(2 * (r as i32 - 1), row_dir), scale(2 * (c as i32 - 1), col_dir)),
    )
}

/// Quarter turn of space about the positive axis `axis_index` (0 = x, 1 = y,
/// 2 = z), clockwise as seen from the positive side.
fn quarter_turn_cw(axis_index: usize, p: V3) -> V3 {
    let [x, y, z] = p;
    match axis_index {
        0 => [x, z, -y],
        1 => [-z, y, x],
        _ => [y, -x, z],
    }
}

/// Point map of one token applied `turns` times about outward direction
/// `spin`: a clockwise quarter turn about a negative axis is three clockwise
/// quarter turns about the positive one.
fn rotate(spin: V3, turns: u8, mut p: V3) -> V3 {
    let axis_index = (0..3).find(|&k| spin[k] != 0).unwrap();
    let reps = if spin[axis_index] > 0 { turns } else { 4 - turns } % 4;
    for _ in 0..reps {
        p = quarter_turn_cw(axis_index, p);
    }
    p
}

struct Oracle {
    colors: [char; 54],
}

impl Oracle {
    fn solved() -> Oracle {
        let mut colors = ['U'; 54];
        for (i, color) in colors.iter_mut().enumerate() {
            *color = FACES[i / 9].letter();
        }
        Oracle { colors }
    }

    fn apply(&mut self, mv: Move) {
        let (spin, member): (V3, Box<dyn Fn(V3) -> bool>) = match mv.target() {
            cube_core::MoveTarget::Face(face) => {
                let normal = FACE_BASES[face.index()].0;
                // A face layer holds the nine face stickers (3 units out)
                // and the twelve side stickers one ring in (2 units out).
                (normal, Box::new(move |p| dot(p, normal) >= 1))
            }
            cube_core::MoveTarget::Axis(axis) => {
                // x, y, z spin the whole cube the way R, U, F turn.
                let face = match axis {
                    Axis::X => Face::R,
                    Axis::Y => Face::U,
                    Axis::Z => Face::F,
                };
                (FACE_BASES[face.index()].0, Box::new(|_| true))
            }
        };
        let mut next = self.colors;
        for i in 0..54 {
            let here = sticker_center(i);
            if member(here) {
                let target = rotate(spin, mv.turns(), here);
                let j = (0..54)
                    .find(|&j| sticker_center(j) == target)
                    .expect("rotated sticker lands on a sticker position");
                next[j] = self.colors[i];
            }
        }
        self.colors = next;
    }

    fn state_string(&self) -> String {
        self.colors.iter().collect()
    }
}

fn all_tokens() -> Vec<Move> {
    let mut tokens: Vec<Move> = Move::all_face_moves().collect();
    for axis in AXES {
        for turns in 1..=3 {
            tokens.push(Move::axis(axis, turns));
        }
    }
    tokens
}

#[test]
fn sticker_centers_are_distinct() {
    for i in 0..54 {
        for j in 0..i {
            assert_ne!(sticker_center(i), sticker_center(j), "stickers {j} and {i}");
        }
    }
}

#[test]
fn every_token_matches_geometry() {
    for token in all_tokens() {
        let mut oracle = Oracle::solved();
        oracle.apply(token);
        let lib = CubieState::identity().apply_move(token).to_facelets();
        assert_eq!(
            lib.to_string(),
            oracle.state_string(),
            "token {token} disagrees with the geometric model"
        );
    }
}

#[test]
fn random_token_sequences_match_geometry() {
    let tokens = all_tokens();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6765_6f6d);
    for case in 0..300 {
        let len = rng.gen_range(1..=40);
        let mut oracle = Oracle::solved();
        let mut state = CubieState::identity();
        let mut applied = Vec::new();
        for _ in 0..len {
            let mv = *tokens.choose(&mut rng).unwrap();
            applied.push(mv.to_string());
            oracle.apply(mv);
            state = state.apply_move(mv);
        }
        assert_eq!(
            state.to_facelets().to_string(),
            oracle.state_string(),
            "case {case}: {}",
            applied.join(" ")
        );
    }
}

#[test]
fn rotation_sandwich_relabels_the_turned_face() {
    let cases = [
        ("x U x'", "F"),
        ("x F x'", "D"),
        ("y U y'", "U"),
        ("y F y'", "R"),
        ("z R z'", "U"),
        ("x2 U x2", "D"),
        ("y' R y", "F"),
    ];
    for (sandwich, plain) in cases {
        let a = CubieState::identity().apply_algorithm(&parse_algorithm(sandwich).unwrap());
        let b = CubieState::identity().apply_algorithm(&parse_algorithm(plain).unwrap());
        assert_eq!(a, b, "{sandwich} should equal {plain}");
    }
}
