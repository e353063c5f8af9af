//! JSON wire schema spoken between the executor and planner backends.
//!
//! One JSON object per request and per response. In-process backends consume
//! the same typed requests; the external backend serializes them as single
//! lines over HTTP POST or a child process's stdin.

use serde::{Deserialize, Serialize};

/// A retrieved memory as shown to a planner: text, weight, and how many
/// ticks ago it was formed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemoryView {
    pub description: String,
    pub importance: u8,
    pub age_ticks: u64,
}

/// Asks a planner to split the job into goal-directed subtasks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeRequest {
    /// Always `"decompose"`.
    pub kind: String,
    pub task_id: String,
    /// 54-sticker description of the current state.
    pub facelets: String,
    pub goal: String,
    pub memories: Vec<MemoryView>,
}

/// One planned subtask: a display name, a goal drawn from the stage
/// vocabulary (`cross`, `first_layer`, `first_two_layers`,
/// `last_layer_oriented`, `solved`), and an optional algorithm hint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubtaskSpec {
    pub name: String,
    pub goal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hint: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeResponse {
    pub subtasks: Vec<SubtaskSpec>,
}

/// Identifies the subtask a step request is serving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubtaskRef {
    pub name: String,
    pub goal: String,
}

/// Asks a planner for its next action on the active subtask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRequest {
    /// Always `"step"`.
    pub kind: String,
    pub subtask: SubtaskRef,
    pub facelets: String,
    /// The most recent action tokens of this subtask, oldest first, at most
    /// ten.
    pub history: Vec<String>,
    pub memories: Vec<MemoryView>,
}

/// A planner's proposal: narration plus one action token. The action is a
/// move from the alphabet, `done` to declare the goal reached, or `abort`
/// to give the subtask up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepResponse {
    pub thought: String,
    pub reasoning: String,
    pub action: String,
    /// Optional weight (1..=10) for the memory formed from this step.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub importance: Option<u8>,
}

/// How many trailing action tokens a step request carries.
pub const HISTORY_WINDOW: usize = 10;

impl DecomposeRequest {
    pub fn new(task_id: &str, facelets: &str, memories: Vec<MemoryView>) -> DecomposeRequest {
        DecomposeRequest {
            kind: "decompose".to_owned(),
            task_id: task_id.to_owned(),
            facelets: facelets.to_owned(),
            goal: "solved".to_owned(),
            memories,
        }
    }
}

impl StepRequest {
    pub fn new(
        subtask: SubtaskRef,
        facelets: &str,
        history: &[String],
        memories: Vec<MemoryView>,
    ) -> StepRequest {
        let start = history.len().saturating_sub(HISTORY_WINDOW);
        StepRequest {
            kind: "step".to_owned(),
            subtask,
            facelets: facelets.to_owned(),
            history: history[start..].to_vec(),
            memories,
        }
    }
}
