//! End-to-end checks for the subgroup-route solver.

use std::time::{Duration, Instant};

use cube_core::{parse_algorithm, CubieState};
use cube_solver::{scramble, solve_fast, SolverError};

const BUDGET: Duration = Duration::from_secs(5);

fn scrambled(seed: u64, len: usize) -> CubieState {
    CubieState::identity().apply_algorithm(&scramble(seed, len))
}

#[test]
fn solves_a_thousand_random_scrambles_within_thirty_moves() {
    for seed in 0..1000u64 {
        let start = scrambled(seed, 25);
        let solution = solve_fast(&start, 30, BUDGET).unwrap();
        assert!(solution.moves().len() <= 30, "seed {seed}");
        assert!(
            start.apply_algorithm(&solution).is_solved(),
            "seed {seed} left the cube unsolved"
        );
    }
}

#[test]
fn solved_cube_gets_an_empty_solution() {
    let solution = solve_fast(&CubieState::identity(), 30, BUDGET).unwrap();
    assert!(solution.moves().is_empty());
}

#[test]
fn identical_inputs_get_identical_solutions() {
    let state = scrambled(99, 25);
    let a = solve_fast(&state, 30, BUDGET).unwrap();
    let b = solve_fast(&state, 30, BUDGET).unwrap();
    assert_eq!(a, b);
}

#[test]
fn respects_the_move_limit() {
    for seed in 0..50u64 {
        let state = scrambled(seed, 25);
        let solution = solve_fast(&state, 26, BUDGET).unwrap();
        assert!(solution.moves().len() <= 26, "seed {seed}");
        assert!(state.apply_algorithm(&solution).is_solved());
    }
}

/// An impossible combination of limits must report the budget error rather
/// than hang or return a wrong answer: no nontrivial state solves in one
/// move under a zero budget.
#[test]
fn reports_budget_exhaustion() {
    let state = scrambled(3, 25);
    let err = solve_fast(&state, 1, Duration::from_millis(0)).unwrap_err();
    match err {
        SolverError::BudgetExceeded { max_len, .. } => assert_eq!(max_len, 1),
        other => panic!("unexpected error {other:?}"),
    }
}

#[test]
fn rotated_scrambles_come_back_in_observer_letters() {
    for text in ["x U R F2", "y2 B L' z D", "z' R2 F x2 U'"] {
        let alg = parse_algorithm(text).unwrap();
        let start = CubieState::identity().apply_algorithm(&alg);
        let solution = solve_fast(&start, 30, BUDGET).unwrap();
        assert!(
            start.apply_algorithm(&solution).is_solved(),
            "scramble {text} unsolved"
        );
    }
}

#[test]
fn warm_solves_average_under_a_tenth_of_a_second() {
    // Warm the shared tables before timing.
    let _ = solve_fast(&scrambled(12345, 25), 30, BUDGET).unwrap();
    let runs = 100;
    let start = Instant::now();
    for seed in 5000..5000 + runs {
        let state = scrambled(seed, 25);
        solve_fast(&state, 30, BUDGET).unwrap();
    }
    let mean = start.elapsed() / runs as u32;
    assert!(
        mean < Duration::from_millis(100),
        "mean solve time {mean:?} over {runs} scrambles"
    );
}
