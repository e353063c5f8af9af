use proptest::prelude::*;

use cube_core::{
    canonicalize, format_algorithm, invert, parse_algorithm, Algorithm, CubieState, Face, Move,
    MoveTarget, AXES,
};

#[test]
fn parses_and_formats_all_tokens() {
    let text = "U U2 U' R R2 R' F F2 F' D D2 D' L L2 L' B B2 B' x x2 x' y y2 y' z z2 z'";
    let alg = parse_algorithm(text).unwrap();
    assert_eq!(alg.len(), 27);
    assert_eq!(format_algorithm(&alg), text);
}

#[test]
fn parse_tolerates_irregular_whitespace() {
    let alg = parse_algorithm("  R\t U2\n  F'  ").unwrap();
    assert_eq!(alg.to_string(), "R U2 F'");
    assert_eq!(parse_algorithm("").unwrap().len(), 0);
    assert_eq!(parse_algorithm("   \n\t ").unwrap().len(), 0);
}

#[test]
fn parse_reports_byte_offsets() {
    let err = parse_algorithm("R U Q2").unwrap_err();
    assert_eq!(err.offset, 4);
    assert!(err.message.contains('Q'), "{}", err.message);

    let err = parse_algorithm("R U3").unwrap_err();
    assert_eq!(err.offset, 3); // points at the bad suffix
    assert!(err.message.contains('3'), "{}", err.message);

    let err = parse_algorithm("R U''").unwrap_err();
    assert_eq!(err.offset, 3);
}

#[test]
fn parse_rejects_lowercase_face_letters() {
    // Face letters are uppercase; lowercase is reserved for rotations.
    assert!(parse_algorithm("r").is_err());
    assert!(parse_algorithm("X").is_err());
}

#[test]
fn invert_examples() {
    let alg = parse_algorithm("R U2 F'").unwrap();
    assert_eq!(invert(&alg).to_string(), "F U2 R'");
    assert_eq!(invert(&parse_algorithm("x y'").unwrap()).to_string(), "y x'");
}

#[test]
fn canonicalize_merges_same_face_runs() {
    let cases = [
        ("R R", "R2"),
        ("R R'", ""),
        ("R2 R2", ""),
        ("R R R", "R'"),
        ("U U2", "U'"),
        ("R U U' R'", ""),
    ];
    for (input, expected) in cases {
        let out = canonicalize(&parse_algorithm(input).unwrap());
        assert_eq!(out.to_string(), expected, "canonicalize({input})");
    }
}

#[test]
fn canonicalize_merges_across_an_opposite_face_turn() {
    let cases = [
        ("U D U'", "D"),
        ("U D U", "U2 D"),
        ("R L R'", "L"),
        ("R L2 R", "R2 L2"),
        ("F B' F'", "B'"),
        ("U D U' D'", ""),
    ];
    for (input, expected) in cases {
        let out = canonicalize(&parse_algorithm(input).unwrap());
        assert_eq!(out.to_string(), expected, "canonicalize({input})");
    }
}

#[test]
fn canonicalize_rewrites_rotations_into_face_turns() {
    let cases = [
        ("x U x'", "F"),
        ("x U", "F"), // trailing orientation is dropped
        ("y F y'", "R"),
        ("x y z", ""),
        ("x x'", ""),
        ("z2 U z2", "D"), // upside down, so the top layer is the old bottom
        ("x R U R' U' x'", "R F R' F'"),
    ];
    for (input, expected) in cases {
        let out = canonicalize(&parse_algorithm(input).unwrap());
        assert_eq!(out.to_string(), expected, "canonicalize({input})");
    }
}

fn token_pool() -> Vec<Move> {
    let mut pool: Vec<Move> = Move::all_face_moves().collect();
    for axis in AXES {
        for turns in 1..=3 {
            pool.push(Move::axis(axis, turns));
        }
    }
    pool
}

fn arbitrary_algorithm() -> impl Strategy<Value = Algorithm> {
    let pool = token_pool();
    prop::collection::vec(0..pool.len(), 0..40)
        .prop_map(move |picks| picks.into_iter().map(|i| pool[i]).collect())
}

fn face_of(mv: Move) -> Option<Face> {
    match mv.target() {
        MoveTarget::Face(face) => Some(face),
        MoveTarget::Axis(_) => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn formatting_round_trips(alg in arbitrary_algorithm()) {
        let reparsed = parse_algorithm(&format_algorithm(&alg)).unwrap();
        prop_assert_eq!(reparsed, alg);
    }

    // The canonical form reproduces the original sticker pattern. Net
    // whole-cube rotation is deliberately not reproduced, so compare
    // patterns, not frames.
    #[test]
    fn canonical_form_preserves_the_pattern(alg in arbitrary_algorithm()) {
        let canon = canonicalize(&alg);
        let original = CubieState::identity().apply_algorithm(&alg);
        let rewritten = CubieState::identity().apply_algorithm(&canon);
        prop_assert!(rewritten.same_pattern(&original));
    }

    #[test]
    fn canonicalize_is_idempotent(alg in arbitrary_algorithm()) {
        let once = canonicalize(&alg);
        let twice = canonicalize(&once);
        prop_assert_eq!(once, twice);
    }

    // Output shape: face turns only, never longer than the input, no
    // adjacent turns of one face, and no two turns of one face separated
    // only by a turn of the opposite face.
    #[test]
    fn canonical_form_is_reduced(alg in arbitrary_algorithm()) {
        let canon = canonicalize(&alg);
        prop_assert!(canon.len() <= alg.len());
        let faces: Vec<Face> = canon.iter().map(|&mv| {
            face_of(mv).expect("canonical form holds face turns only")
        }).collect();
        for w in faces.windows(2) {
            prop_assert_ne!(w[0], w[1]);
        }
        for w in faces.windows(3) {
            prop_assert!(!(w[0] == w[2] && w[1] == w[0].opposite()));
        }
    }

    // For rotation-free input the rewrite is exact: same state, frame and
    // all.
    #[test]
    fn canonical_form_is_exact_without_rotations(
        picks in prop::collection::vec(0..18usize, 0..40)
    ) {
        let pool: Vec<Move> = Move::all_face_moves().collect();
        let alg: Algorithm = picks.into_iter().map(|i| pool[i]).collect();
        let canon = canonicalize(&alg);
        let original = CubieState::identity().apply_algorithm(&alg);
        let rewritten = CubieState::identity().apply_algorithm(&canon);
        prop_assert_eq!(rewritten, original);
    }
}

#[test]
fn algorithm_serde_round_trips() {
    let alg = parse_algorithm("R U R' U'").unwrap();
    let json = serde_json::to_string(&alg).unwrap();
    assert_eq!(json, "\"R U R' U'\"");
    let back: Algorithm = serde_json::from_str(&json).unwrap();
    assert_eq!(back, alg);
}
