use cube_core::{Algorithm, StagePredicate};

use crate::error::AgentError;
use crate::wire::SubtaskSpec;

/// Lifecycle of a subtask. Transitions only run forward:
/// pending -> active -> done or failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubtaskStatus {
    Pending,
    Active,
    Done,
    Failed,
}

/// One unit of work from a plan: a goal to establish and an optional
/// algorithm hint for reaching it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subtask {
    pub name: String,
    pub goal: StagePredicate,
    pub hint: Option<Algorithm>,
    pub status: SubtaskStatus,
}

impl Subtask {
    /// Validates a wire subtask: the goal must be a stage-vocabulary token
    /// and the hint, when present, must parse.
    pub fn from_spec(spec: &SubtaskSpec) -> Result<Subtask, AgentError> {
        let goal: StagePredicate = spec.goal.parse().map_err(|_| AgentError::PlannerError {
            reason: format!("unknown goal token {:?} in subtask {:?}", spec.goal, spec.name),
        })?;
        let hint = match &spec.hint {
            None => None,
            Some(text) => Some(text.parse().map_err(|e| AgentError::PlannerError {
                reason: format!("unparseable hint in subtask {:?}: {e}", spec.name),
            })?),
        };
        Ok(Subtask { name: spec.name.clone(), goal, hint, status: SubtaskStatus::Pending })
    }

    /// The single full-solve subtask used when plans are flattened: no
    /// intermediate milestones, one combined hint.
    pub fn flat_solve(hint: Option<Algorithm>) -> Subtask {
        Subtask {
            name: "solve".to_string(),
            goal: StagePredicate::Solved,
            hint,
            status: SubtaskStatus::Pending,
        }
    }

    pub fn activate(&mut self) {
        assert_eq!(self.status, SubtaskStatus::Pending, "subtask activated twice");
        self.status = SubtaskStatus::Active;
    }

    pub fn finish(&mut self, success: bool) {
        assert_eq!(self.status, SubtaskStatus::Active, "finishing an inactive subtask");
        self.status = if success { SubtaskStatus::Done } else { SubtaskStatus::Failed };
    }

    /// Number of moves the hint expects; zero when there is no hint.
    pub fn expected_moves(&self) -> usize {
        self.hint.as_ref().map_or(0, |h| h.moves().len())
    }
}
