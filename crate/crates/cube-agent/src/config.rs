use serde::{Deserialize, Serialize};

/// Knobs for one agent run. The two enable flags realize the ablation grid;
/// everything else is budgets and determinism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// When off, the initial plan is flattened to a single solved-goal
    /// subtask and failed subtasks are never replanned.
    pub enable_outer_loop: bool,
    /// When off, nothing is recorded to or retrieved from the memory stream.
    pub enable_memory: bool,
    /// Step allowance per subtask, as a multiple of the hint's length.
    pub step_budget_factor: usize,
    /// Total plan revisions allowed per task.
    pub max_replans: usize,
    /// A subtask fails as deadlocked once any single state has been seen
    /// more than this many times within the subtask.
    pub repeat_state_threshold: usize,
    /// How many memories a retrieval returns to the planner.
    pub retrieval_k: usize,
    /// Run seed; per-task backend seeds are derived from it.
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            enable_outer_loop: true,
            enable_memory: true,
            step_budget_factor: 4,
            max_replans: 3,
            repeat_state_threshold: 3,
            retrieval_k: 5,
            seed: 0,
        }
    }
}

/// Step floor so that even a one-move subtask has room to recover from a
/// few wrong turns.
pub(crate) const MIN_STEP_BUDGET: usize = 8;

impl RunConfig {
    pub(crate) fn validate(&self) {
        assert!(self.step_budget_factor >= 1, "step budget factor must be positive");
        assert!(self.retrieval_k >= 1, "retrieval k must be positive");
        assert!(self.repeat_state_threshold >= 1, "repeat threshold must be positive");
    }

    /// Step allowance for a subtask whose hint expects `expected` moves.
    pub(crate) fn step_budget(&self, expected: usize) -> usize {
        (self.step_budget_factor * expected).max(MIN_STEP_BUDGET)
    }
}

/// Derives the backend seed for one task of a run, mixing the run seed with
/// the task id so sibling tasks draw independent randomness.
pub fn backend_seed(run_seed: u64, task_id: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ run_seed.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for b in task_id.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h ^= h >> 32;
    h
}
