//! Benchmark task generation across three difficulty bands.

use std::fmt;

use cube_core::{Algorithm, CubieState};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::optimal::{optimal_length_bounded, OptimalLength};
use crate::scramble::scramble;
use crate::staged::solve_staged;

/// Difficulty band of a generated task.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Low,
    Medium,
    High,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Low => "low",
            Level::Medium => "medium",
            Level::High => "high",
        }
    }

    /// Move allowance for an agent attempting the task: four times the band's
    /// upper difficulty bound.
    pub fn max_moves(self) -> usize {
        match self {
            Level::Low => 4,
            Level::Medium => 48,
            Level::High => 124,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Level, String> {
        match s {
            "low" => Ok(Level::Low),
            "medium" => Ok(Level::Medium),
            "high" => Ok(Level::High),
            other => Err(format!("unknown level {other:?}, expected low, medium, or high")),
        }
    }
}

/// One benchmark task. Serialized form is stable: the same seed always
/// produces byte-identical JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Task {
    pub id: String,
    pub level: Level,
    /// Scramble applied to the solved cube to produce the start state.
    pub scramble: String,
    /// Sticker string of the start state.
    pub start_facelets: String,
    pub goal: String,
    /// Hard cap on moves an attempt may spend.
    pub max_moves: usize,
    /// Length of the layer-by-layer plan measured during generation.
    pub measured_method_length: usize,
    /// Exact optimal length when it is within the bounded search's cap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured_optimal_length: Option<u8>,
}

impl Task {
    pub fn scramble_algorithm(&self) -> Algorithm {
        self.scramble.parse().expect("stored scramble always parses")
    }

    pub fn start_state(&self) -> CubieState {
        CubieState::identity().apply_algorithm(&self.scramble_algorithm())
    }
}

/// Candidate scrambles tried before generation reports exhaustion.
const ATTEMPT_CAP: usize = 400;

/// Difficulty gates, as shortest-solution lengths for the bands that measure
/// them and plan length for the band that does not.
const MEDIUM_OPTIMAL: std::ops::RangeInclusive<u8> = 9..=12;
const HIGH_METHOD: std::ops::RangeInclusive<usize> = 19..=31;

/// Generates one task in the requested band. Candidates are drawn from the
/// seed and rejected until one meets the band's difficulty gate; the same
/// seed and level always produce the same task.
pub fn generate_task(seed: u64, level: Level) -> Result<Task, SolverError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPT_CAP {
        if let Some(task) = try_candidate(&mut rng, seed, level) {
            return Ok(task);
        }
    }
    Err(SolverError::GenerationExhausted { level, attempts: ATTEMPT_CAP })
}

fn try_candidate(rng: &mut ChaCha8Rng, seed: u64, level: Level) -> Option<Task> {
    let scramble_alg = match level {
        Level::Low => {
            // One inverted basic instruction: the solution is a single
            // quarter turn.
            let face = cube_core::Face::from_index(rng.gen_range(0..6));
            let turns = if rng.gen_range(0..2) == 0 { 1 } else { 3 };
            Algorithm::new(vec![cube_core::Move::face(face, turns).inverse()])
        }
        Level::Medium => {
            let len = rng.gen_range(9..=12);
            scramble(rng.gen(), len)
        }
        Level::High => {
            let len = rng.gen_range(4..=8);
            scramble(rng.gen(), len)
        }
    };
    let state = CubieState::identity().apply_algorithm(&scramble_alg);
    let plan = solve_staged(&state);
    let method_length = plan.method_length();

    let measured_optimal = match level {
        Level::Low => match optimal_length_bounded(&state, 12) {
            OptimalLength::Exact(1) => Some(1),
            _ => return None,
        },
        Level::Medium => {
            if method_length > level.max_moves() {
                return None;
            }
            match optimal_length_bounded(&state, 12) {
                OptimalLength::Exact(n) if MEDIUM_OPTIMAL.contains(&n) => Some(n),
                _ => return None,
            }
        }
        Level::High => {
            if !HIGH_METHOD.contains(&method_length) {
                return None;
            }
            // High-band scrambles are short, so the exact length is always
            // within the bounded search's reach.
            match optimal_length_bounded(&state, 12) {
                OptimalLength::Exact(n) => Some(n),
                OptimalLength::AboveCap => None,
            }
        }
    };

    Some(Task {
        id: format!("{}-{:016x}", level, seed),
        level,
        scramble: scramble_alg.to_string(),
        start_facelets: state.to_facelets().to_string(),
        goal: "solved".to_string(),
        max_moves: level.max_moves(),
        measured_method_length: method_length,
        measured_optimal_length: measured_optimal,
    })
}
