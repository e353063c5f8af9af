use cube_core::{parse_move, CubieState, FaceletState};
use serde::{Deserialize, Serialize};

/// One executed action with the narration that chose it and the state it
/// produced. The final step of each subtask also carries that subtask's
/// closing reflection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub thought: String,
    pub reasoning: String,
    /// The executed alphabet token.
    pub action: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reflection: Option<String>,
    /// 54-sticker string after the action.
    pub state_after: String,
    /// Global step index within the run, starting at 0.
    pub tick: u64,
}

/// Complete record of one task attempt. Serialization is stable: the same
/// configuration and seed produce byte-identical JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub task_id: String,
    pub success: bool,
    pub moves_used: usize,
    pub steps: Vec<StepRecord>,
    pub replans: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<String>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Independently re-checks a report against its task: replaying the recorded
/// actions from the start facelets must reproduce every step's state and,
/// for a success, end solved within the move budget.
pub fn verify_report(
    start_facelets: &str,
    max_moves: usize,
    report: &RunReport,
) -> Result<(), String> {
    let parsed = FaceletState::parse(start_facelets).map_err(|e| format!("bad start: {e}"))?;
    let mut state =
        CubieState::from_facelets(&parsed).map_err(|e| format!("impossible start: {e}"))?;
    for (i, step) in report.steps.iter().enumerate() {
        let mv = parse_move(&step.action).map_err(|e| format!("step {i}: bad action: {e}"))?;
        state = state.apply_move(mv);
        let got = state.to_facelets().to_string_form();
        if got != step.state_after {
            return Err(format!("step {i}: replay diverges from the recorded state"));
        }
    }
    if report.moves_used != report.steps.len() {
        return Err("move count disagrees with the step list".to_owned());
    }
    if report.success {
        if !state.is_solved() {
            return Err("successful report does not end solved".to_owned());
        }
        if report.moves_used > max_moves {
            return Err(format!(
                "success used {} moves against a cap of {max_moves}",
                report.moves_used
            ));
        }
    }
    Ok(())
}
