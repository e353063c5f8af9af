//! Compiled scripts reproduce their source algorithms exactly.

use cube_core::{Algorithm, CubieState, Face, Move};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rig_sim::{compile_script, simulate, Primitive, RigError, RobotScript};

fn random_algorithm(seed: u64, len: usize, with_rotations: bool) -> Algorithm {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let moves: Vec<Move> = (0..len)
        .map(|_| {
            if with_rotations && rng.gen_range(0..5) == 0 {
                Move::axis(cube_core::AXES[rng.gen_range(0..3)], rng.gen_range(1..=3))
            } else {
                Move::face(Face::from_index(rng.gen_range(0..6)), rng.gen_range(1..=3))
            }
        })
        .collect();
    Algorithm::new(moves)
}

fn random_state(seed: u64) -> CubieState {
    CubieState::identity().apply_algorithm(&random_algorithm(seed ^ 0x5eed, 25, false))
}

#[test]
fn a_thousand_random_scripts_match_direct_application() {
    for seed in 0..1000u64 {
        let alg = random_algorithm(seed, 30, false);
        let start = random_state(seed);
        let scripted = simulate(&compile_script(&alg), &start).unwrap();
        assert_eq!(scripted, start.apply_algorithm(&alg), "seed {seed}");
    }
}

#[test]
fn scripts_with_reorientations_match_direct_application() {
    for seed in 0..200u64 {
        let alg = random_algorithm(seed, 20, true);
        let start = random_state(seed);
        let scripted = simulate(&compile_script(&alg), &start).unwrap();
        assert_eq!(scripted, start.apply_algorithm(&alg), "seed {seed}");
    }
}

#[test]
fn empty_script_leaves_the_state_alone() {
    let state = random_state(7);
    assert_eq!(simulate(&RobotScript::default(), &state).unwrap(), state);
}

#[test]
fn half_turn_triple_equals_the_half_turn() {
    let script = RobotScript::new(vec![
        Primitive::Grip { face: Face::U },
        Primitive::Rotate { face: Face::U, q: 2 },
        Primitive::Release { face: Face::U },
    ]);
    let direct = CubieState::identity().apply_move(Move::face(Face::U, 2));
    assert_eq!(simulate(&script, &CubieState::identity()).unwrap(), direct);
}

#[test]
fn rotate_without_grip_is_rejected() {
    let script = RobotScript::new(vec![Primitive::Rotate { face: Face::R, q: 1 }]);
    match simulate(&script, &CubieState::identity()) {
        Err(RigError::ScriptError { index: 0, reason }) => assert!(reason.contains("ROTATE")),
        other => panic!("expected ScriptError, got {other:?}"),
    }
}

#[test]
fn rotate_after_release_is_rejected() {
    let script = RobotScript::new(vec![
        Primitive::Grip { face: Face::F },
        Primitive::Release { face: Face::F },
        Primitive::Rotate { face: Face::F, q: 1 },
    ]);
    match simulate(&script, &CubieState::identity()) {
        Err(RigError::ScriptError { index: 2, .. }) => {}
        other => panic!("expected ScriptError at index 2, got {other:?}"),
    }
}

#[test]
fn dangling_grip_is_rejected() {
    let script = RobotScript::new(vec![Primitive::Grip { face: Face::B }]);
    match simulate(&script, &CubieState::identity()) {
        Err(RigError::ScriptError { reason, .. }) => assert!(reason.contains("still gripped")),
        other => panic!("expected ScriptError, got {other:?}"),
    }
}

#[test]
fn reorient_while_gripped_is_rejected() {
    let script = RobotScript::new(vec![
        Primitive::Grip { face: Face::L },
        Primitive::Reorient { axis: cube_core::Axis::Y, q: 1 },
    ]);
    assert!(matches!(
        simulate(&script, &CubieState::identity()),
        Err(RigError::ScriptError { index: 1, .. })
    ));
}

#[test]
fn compiled_scripts_round_trip_through_jsonl() {
    for seed in 0..50u64 {
        let script = compile_script(&random_algorithm(seed, 15, true));
        let back = RobotScript::from_jsonl(&script.to_jsonl()).unwrap();
        assert_eq!(back, script);
        let state = random_state(seed);
        assert_eq!(simulate(&back, &state).unwrap(), simulate(&script, &state).unwrap());
    }
}
