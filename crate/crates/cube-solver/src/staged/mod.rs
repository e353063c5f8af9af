//! Layer-by-layer planner that explains its work.
//!
//! Stages run in a fixed order: bottom-edge cross, bottom-layer corners,
//! middle-layer edges, last-layer orientation, last-layer permutation. Each
//! planned stage carries the predicate it establishes, a canonical algorithm,
//! and the names of the step templates the moves came from. Stages already
//! satisfied at their turn are omitted, so a solved input yields an empty
//! plan.

mod finish;
mod search;

use cube_core::{canonicalize, Algorithm, CubieState, StagePredicate, STAGES};

use crate::coords::RawState;
use crate::observer_algorithm;
use crate::tables::tables;

pub use finish::TEMPLATE_NAMES;

/// One planned stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageStep {
    /// The stage predicate's name, e.g. `"cross"`.
    pub name: &'static str,
    /// Cumulative predicate this stage establishes.
    pub goal: StagePredicate,
    /// Canonical moves for the stage, in the caller's letters.
    pub algorithm: Algorithm,
    /// Step templates applied, in order. Empty only when the stage's entire
    /// work is a top-face alignment turn, which no template names.
    pub labels: Vec<&'static str>,
}

/// Ordered stage plan; applying each stage's algorithm in turn satisfies its
/// predicate and ends with the cube solved.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StagePlan {
    pub stages: Vec<StageStep>,
}

impl StagePlan {
    /// All stage algorithms joined in order. Not re-canonicalized: each stage
    /// keeps its own boundary.
    pub fn concatenated(&self) -> Algorithm {
        let mut out = Algorithm::new(Vec::new());
        for stage in &self.stages {
            out.extend_from(&stage.algorithm);
        }
        out
    }

    /// Total move count across stages, each counted in canonical form.
    pub fn method_length(&self) -> usize {
        self.stages.iter().map(|s| s.algorithm.moves().len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }
}

/// Plans a full solve of `state`. Deterministic: the same state always yields
/// the same plan. Never fails; every representable state is reachable, and
/// every stage's case analysis is total.
pub fn solve_staged(state: &CubieState) -> StagePlan {
    let t = tables();
    let frame = state.frame();
    let mut raw = RawState::of(state);
    let mut stages = Vec::new();
    for goal in STAGES {
        if stage_done(goal, &raw) {
            continue;
        }
        let (moves, labels) = match goal {
            StagePredicate::Cross => search::cross_stage(&raw, t),
            StagePredicate::FirstLayer => search::bottom_corner_stage(&raw, t),
            StagePredicate::FirstTwoLayers => search::equator_stage(&raw, t),
            StagePredicate::LastLayerOriented => finish::orient_stage(&raw, t),
            StagePredicate::Solved => finish::permute_stage(&raw, t),
        };
        for &m in &moves {
            raw = raw.then(&t.actions[m]);
        }
        debug_assert!(stage_done(goal, &raw), "stage {} left incomplete", goal.name());
        let algorithm = canonicalize(&observer_algorithm(frame, &moves));
        stages.push(StageStep { name: goal.name(), goal, algorithm, labels });
    }
    StagePlan { stages }
}

fn stage_done(goal: StagePredicate, raw: &RawState) -> bool {
    as_state(raw).stage_satisfied(goal)
}

pub(crate) fn as_state(raw: &RawState) -> CubieState {
    CubieState::from_parts(raw.cp, raw.co, raw.ep, raw.eo)
        .expect("states reached by face turns stay reachable")
}
