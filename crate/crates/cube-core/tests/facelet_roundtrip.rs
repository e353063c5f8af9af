use proptest::prelude::*;

use cube_core::{render_net, CubeError, CubieState, FaceletState, Move, AXES};

const SOLVED: &str =
    "UUUUUUUUURRRRRRRRRFFFFFFFFFDDDDDDDDDLLLLLLLLLBBBBBBBBB";

fn token_pool() -> Vec<Move> {
    let mut pool: Vec<Move> = Move::all_face_moves().collect();
    for axis in AXES {
        for turns in 1..=3 {
            pool.push(Move::axis(axis, turns));
        }
    }
    pool
}

fn arbitrary_state() -> impl Strategy<Value = CubieState> {
    let pool = token_pool();
    prop::collection::vec(0..pool.len(), 0..40).prop_map(move |picks| {
        let mut state = CubieState::identity();
        for i in picks {
            state = state.apply_move(pool[i]);
        }
        state
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    // Serializing to stickers and reading back recovers the state exactly,
    // including the whole-cube orientation encoded in the centers.
    #[test]
    fn facelets_round_trip(state in arbitrary_state()) {
        let text = state.to_facelets().to_string();
        let reparsed: FaceletState = text.parse().unwrap();
        let back = CubieState::from_facelets(&reparsed).unwrap();
        prop_assert_eq!(back, state);
    }
}

#[test]
fn solved_state_prints_the_reference_string() {
    assert_eq!(CubieState::identity().to_facelets().to_string(), SOLVED);
}

#[test]
fn parse_rejects_wrong_length() {
    let err = FaceletState::parse("UUU").unwrap_err();
    assert!(matches!(err, CubeError::MalformedFacelets(_)), "{err}");
}

#[test]
fn parse_rejects_unknown_letters() {
    let bad = SOLVED.replace('B', "Q");
    let err = FaceletState::parse(&bad).unwrap_err();
    assert!(matches!(err, CubeError::MalformedFacelets(_)), "{err}");
}

#[test]
fn parse_rejects_unbalanced_colors() {
    let mut s: Vec<u8> = SOLVED.bytes().collect();
    s[0] = b'R'; // ten R stickers, eight U
    let err = FaceletState::parse(std::str::from_utf8(&s).unwrap()).unwrap_err();
    assert!(matches!(err, CubeError::MalformedFacelets(_)), "{err}");
}

#[test]
fn parse_rejects_duplicated_centers() {
    let mut s: Vec<u8> = SOLVED.bytes().collect();
    // Swap the R center with an off-center U sticker: counts stay balanced
    // but two faces now show a U center.
    s[13] = b'U';
    s[3] = b'R';
    let err = FaceletState::parse(std::str::from_utf8(&s).unwrap()).unwrap_err();
    assert!(matches!(err, CubeError::MalformedFacelets(_)), "{err}");
}

#[test]
fn decode_rejects_mirrored_centers() {
    // Exchanging only the U and D centers describes a reflection, which no
    // rigid rotation of the cube produces.
    let mut s: Vec<u8> = SOLVED.bytes().collect();
    s[4] = b'D';
    s[31] = b'U';
    let f = FaceletState::parse(std::str::from_utf8(&s).unwrap()).unwrap();
    let err = CubieState::from_facelets(&f).unwrap_err();
    assert!(matches!(err, CubeError::UnsolvableState(_)), "{err}");
}

#[test]
fn decode_rejects_twisted_corner() {
    // Cycle the three stickers of one corner: well-formed, but total twist
    // becomes 1.
    let mut s: Vec<u8> = SOLVED.bytes().collect();
    s[8] = b'F';
    s[9] = b'U';
    s[20] = b'R';
    let f = FaceletState::parse(std::str::from_utf8(&s).unwrap()).unwrap();
    let err = CubieState::from_facelets(&f).unwrap_err();
    assert!(matches!(err, CubeError::UnsolvableState(_)), "{err}");
}

#[test]
fn decode_rejects_flipped_edge() {
    let mut s: Vec<u8> = SOLVED.bytes().collect();
    s[7] = b'F';
    s[19] = b'U';
    let f = FaceletState::parse(std::str::from_utf8(&s).unwrap()).unwrap();
    let err = CubieState::from_facelets(&f).unwrap_err();
    assert!(matches!(err, CubeError::UnsolvableState(_)), "{err}");
}

#[test]
fn decode_rejects_swapped_corner_pair() {
    // Exchanging exactly two corner pieces flips corner parity while edge
    // parity stays even.
    let mut s: Vec<u8> = SOLVED.bytes().collect();
    // Slot URF gets the UFL piece's colors, slot UFL gets URF's.
    s[8] = b'U';
    s[9] = b'F';
    s[20] = b'L';
    s[6] = b'U';
    s[18] = b'R';
    s[38] = b'F';
    let f = FaceletState::parse(std::str::from_utf8(&s).unwrap()).unwrap();
    let err = CubieState::from_facelets(&f).unwrap_err();
    assert!(matches!(err, CubeError::UnsolvableState(_)), "{err}");
}

#[test]
fn decode_rejects_impossible_corner_coloring() {
    // Swap one corner sticker with a same-face edge sticker: the corner then
    // shows two F colors and no U or D color.
    let mut s: Vec<u8> = SOLVED.bytes().collect();
    s[8] = b'F';
    s[23] = b'U';
    let f = FaceletState::parse(std::str::from_utf8(&s).unwrap()).unwrap();
    let err = CubieState::from_facelets(&f).unwrap_err();
    assert!(matches!(err, CubeError::UnsolvableState(_)), "{err}");
}

#[test]
fn serde_uses_the_string_form() {
    let state = CubieState::identity().apply_move(Move::face(cube_core::Face::R, 1));
    let facelets = state.to_facelets();
    let json = serde_json::to_string(&facelets).unwrap();
    assert_eq!(json, format!("\"{facelets}\""));
    let back: FaceletState = serde_json::from_str(&json).unwrap();
    assert_eq!(back, facelets);
}

#[test]
fn net_rendering_places_every_face() {
    let net = render_net(&CubieState::identity().to_facelets());
    let expected = concat!(
        "      U U U\n",
        "      U U U\n",
        "      U U U\n",
        "L L L F F F R R R B B B\n",
        "L L L F F F R R R B B B\n",
        "L L L F F F R R R B B B\n",
        "      D D D\n",
        "      D D D\n",
        "      D D D\n",
    );
    assert_eq!(net, expected);
}
