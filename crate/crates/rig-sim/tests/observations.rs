//! Observation coverage and state reconstruction.

use cube_core::{Algorithm, CubieState, Face, Move};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rig_sim::{
    observe, reconstruct, Observation, ObservationMode, Reconstruction, RigError, Viewpoint,
    VIEWPOINTS,
};

fn random_state(seed: u64) -> CubieState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let moves: Vec<Move> = (0..25)
        .map(|_| Move::face(Face::from_index(rng.gen_range(0..6)), rng.gen_range(1..=3)))
        .collect();
    CubieState::identity().apply_algorithm(&Algorithm::new(moves))
}

#[test]
fn full_observation_is_the_complete_sticker_string() {
    let state = random_state(1);
    let truth: Vec<char> = state.to_facelets().to_string().chars().collect();
    let obs = observe(&state, ObservationMode::Full, Viewpoint::Urf);
    assert_eq!(obs.stickers.len(), 54);
    for (i, &(position, color)) in obs.stickers.iter().enumerate() {
        assert_eq!(position as usize, i);
        assert_eq!(color, truth[i]);
    }
}

#[test]
fn partial_observation_shows_exactly_the_three_visible_faces() {
    let state = random_state(2);
    let obs = observe(&state, ObservationMode::Partial, Viewpoint::Urf);
    assert_eq!(obs.stickers.len(), 27);
    let faces: Vec<usize> = [Face::U, Face::R, Face::F].iter().map(|f| f.index()).collect();
    for &(position, _) in &obs.stickers {
        assert!(faces.contains(&(position as usize / 9)), "position {position}");
    }
}

#[test]
fn partial_observations_are_restrictions_of_the_truth() {
    for seed in 0..50u64 {
        let state = random_state(seed);
        let truth: Vec<char> = state.to_facelets().to_string().chars().collect();
        for vp in VIEWPOINTS {
            for &(position, color) in &observe(&state, ObservationMode::Partial, vp).stickers {
                assert_eq!(color, truth[position as usize], "seed {seed} viewpoint {vp}");
            }
        }
    }
}

#[test]
fn opposite_corners_reconstruct_the_full_state() {
    for seed in 0..50u64 {
        let state = random_state(seed);
        for vp in VIEWPOINTS {
            let pair = [
                observe(&state, ObservationMode::Partial, vp),
                observe(&state, ObservationMode::Partial, vp.opposite()),
            ];
            match reconstruct(&pair).unwrap() {
                Reconstruction::Complete(facelets) => assert_eq!(facelets, state.to_facelets()),
                other => panic!("seed {seed} viewpoint {vp}: expected Complete, got {other:?}"),
            }
        }
    }
}

#[test]
fn all_eight_viewpoints_reconstruct_the_full_state() {
    let state = random_state(9);
    let all: Vec<Observation> = VIEWPOINTS
        .iter()
        .map(|&vp| observe(&state, ObservationMode::Partial, vp))
        .collect();
    match reconstruct(&all).unwrap() {
        Reconstruction::Complete(facelets) => assert_eq!(facelets, state.to_facelets()),
        other => panic!("expected Complete, got {other:?}"),
    }
}

#[test]
fn single_partial_observation_leaves_27_missing() {
    let state = random_state(3);
    let obs = observe(&state, ObservationMode::Partial, Viewpoint::Dlf);
    match reconstruct(&[obs]).unwrap() {
        Reconstruction::Incomplete { missing } => assert_eq!(missing, 27),
        other => panic!("expected Incomplete, got {other:?}"),
    }
}

#[test]
fn no_observations_leave_everything_missing() {
    match reconstruct(&[]).unwrap() {
        Reconstruction::Incomplete { missing } => assert_eq!(missing, 54),
        other => panic!("expected Incomplete, got {other:?}"),
    }
}

#[test]
fn disagreeing_observations_conflict() {
    let a = random_state(4);
    let b = a.apply_move(Move::face(Face::U, 1));
    let pair = [
        observe(&a, ObservationMode::Partial, Viewpoint::Urf),
        observe(&b, ObservationMode::Partial, Viewpoint::Urf),
    ];
    match reconstruct(&pair) {
        Err(RigError::ConflictError(reason)) => assert!(reason.contains("sticker")),
        other => panic!("expected ConflictError, got {other:?}"),
    }
}

#[test]
fn observations_of_different_states_with_no_overlap_still_conflict() {
    // Disjoint halves taken from two different states merge without any
    // per-sticker disagreement but cannot form one well-formed cube.
    let a = random_state(5);
    let b = a.apply_move(Move::face(Face::U, 1));
    let pair = [
        observe(&a, ObservationMode::Partial, Viewpoint::Urf),
        observe(&b, ObservationMode::Partial, Viewpoint::Dbl),
    ];
    match reconstruct(&pair) {
        Err(RigError::ConflictError(reason)) => assert!(reason.contains("impossible")),
        Ok(Reconstruction::Complete(_)) => panic!("impossible merge accepted"),
        other => panic!("unexpected outcome {other:?}"),
    }
}

#[test]
fn full_observation_alone_reconstructs() {
    let state = random_state(6);
    let obs = observe(&state, ObservationMode::Full, Viewpoint::Ubr);
    match reconstruct(&[obs]).unwrap() {
        Reconstruction::Complete(facelets) => assert_eq!(facelets, state.to_facelets()),
        other => panic!("expected Complete, got {other:?}"),
    }
}
