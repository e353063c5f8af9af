//! Properties of the scramble generator.

use std::collections::HashSet;

use cube_core::{canonicalize, MoveTarget};
use cube_solver::scramble;

#[test]
fn produces_exactly_the_requested_length() {
    for seed in 0..100u64 {
        for len in [0, 1, 5, 12, 25, 40] {
            assert_eq!(scramble(seed, len).moves().len(), len);
        }
    }
}

#[test]
fn never_repeats_a_face_and_never_stacks_an_axis_three_deep() {
    for seed in 0..500u64 {
        let alg = scramble(seed, 30);
        let faces: Vec<_> = alg
            .moves()
            .iter()
            .map(|mv| match mv.target() {
                MoveTarget::Face(face) => face,
                MoveTarget::Axis(_) => panic!("scrambles contain face turns only"),
            })
            .collect();
        for pair in faces.windows(2) {
            assert_ne!(pair[0], pair[1], "seed {seed} repeats a face");
        }
        for triple in faces.windows(3) {
            let axis = triple[0].axis_index();
            assert!(
                !(triple[1].axis_index() == axis && triple[2].axis_index() == axis),
                "seed {seed} stacks three turns on one axis"
            );
        }
    }
}

/// The adjacency rules make every scramble already canonical: rewriting
/// must not shorten it.
#[test]
fn scrambles_are_already_canonical() {
    for seed in 0..500u64 {
        let alg = scramble(seed, 25);
        assert_eq!(canonicalize(&alg).moves().len(), 25, "seed {seed}");
    }
}

#[test]
fn same_seed_same_scramble_different_seed_almost_always_different() {
    let mut distinct = HashSet::new();
    for seed in 0..200u64 {
        let a = scramble(seed, 20);
        let b = scramble(seed, 20);
        assert_eq!(a, b, "seed {seed} not reproducible");
        distinct.insert(format!("{a}"));
    }
    assert!(distinct.len() > 195, "only {} distinct scrambles", distinct.len());
}
