use std::time::Duration;

use crate::tasks::Level;

/// Failures surfaced by the search and generation entry points.
///
/// Impossible cube states never appear here: [`cube_core::CubieState`] can
/// only hold reachable patterns, so the solvers are total over their inputs
/// and only resource limits can stop them.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    /// The bounded search gave up before finding a solution within the
    /// requested move limit and wall-clock budget.
    #[error("no solution of length <= {max_len} found within {budget:?}")]
    BudgetExceeded { max_len: usize, budget: Duration },

    /// Task generation rejected every candidate scramble it tried.
    #[error("gave up generating a {level} task after {attempts} attempts")]
    GenerationExhausted { level: Level, attempts: usize },
}
