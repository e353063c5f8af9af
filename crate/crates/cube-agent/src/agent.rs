//! The dual-loop agent: an outer loop that plans and reflects, and an inner
//! loop that executes one subtask at a time through the simulated rig.
//!
//! The outer loop asks the backend to decompose the task into subtasks, runs
//! them in order, and after each one reflects on the outcome: advance to the
//! next subtask, replan from the current state, or abort the run. The inner
//! loop drives a single subtask step by step — retrieve memories, ask the
//! backend for an action, execute it on the rig, observe the result, and
//! record what happened.

use std::collections::{HashMap, VecDeque};

use cube_core::{parse_move, CubieState, StagePredicate};
use cube_solver::Task;
use memory_stream::{MemoryKind, MemoryStream};
use rig_sim::{compile_script, observe, reconstruct, simulate, Observation, ObservationMode,
    Reconstruction, Viewpoint};

use crate::backend::{PlannerBackend, StepContext};
use crate::config::RunConfig;
use crate::error::AgentError;
use crate::report::{RunReport, StepRecord};
use crate::subtask::Subtask;
use crate::wire::{DecomposeRequest, MemoryView, StepResponse};

/// Why a subtask attempt ended without reaching its goal.
#[derive(Debug, Clone, PartialEq, Eq)]
enum SubtaskFailure {
    /// The per-subtask step budget ran out.
    StepBudget,
    /// The task's overall move allowance ran out.
    MoveBudget,
    /// The same cube state recurred more often than the configured threshold.
    Deadlock,
    /// The backend declared `done` while the goal did not hold.
    PrematureDone,
    /// The backend declared `abort`.
    BackendAbort,
    /// The backend failed twice in a row on the same step.
    Protocol(String),
}

impl SubtaskFailure {
    fn reason(&self) -> &'static str {
        match self {
            SubtaskFailure::StepBudget => "step_budget_exhausted",
            SubtaskFailure::MoveBudget => "move_budget_exhausted",
            SubtaskFailure::Deadlock => "deadlock",
            SubtaskFailure::PrematureDone => "premature_done",
            SubtaskFailure::BackendAbort => "backend_abort",
            SubtaskFailure::Protocol(_) => "protocol_error",
        }
    }

    fn describe(&self) -> String {
        match self {
            SubtaskFailure::Protocol(detail) => format!("protocol_error: {detail}"),
            other => other.reason().to_string(),
        }
    }
}

/// Outcome of one subtask attempt.
enum SubtaskOutcome {
    Done { actions: usize },
    Failed { actions: usize, why: SubtaskFailure },
}

/// A planner-executor that works one task to completion (or failure).
///
/// Construct with a backend and a [`RunConfig`], then call [`Agent::run`].
/// The memory stream accumulates across the run and can be inspected
/// afterwards through [`Agent::memory`].
pub struct Agent {
    backend: Box<dyn PlannerBackend>,
    config: RunConfig,
    memory: MemoryStream,
    tick: u64,
}

impl Agent {
    /// Build an agent. Panics if the configuration is invalid.
    pub fn new(backend: Box<dyn PlannerBackend>, config: RunConfig) -> Agent {
        config.validate();
        Agent { backend, config, memory: MemoryStream::new(), tick: 0 }
    }

    /// The memories accumulated so far.
    pub fn memory(&self) -> &MemoryStream {
        &self.memory
    }

    /// Ask the backend for a plan and validate it into an executable queue.
    ///
    /// With the outer loop disabled the plan is flattened: the hints of all
    /// subtasks are concatenated into a single full-solve subtask, so the
    /// run has no intermediate milestones and no replanning.
    pub fn plan_initial(&mut self, task: &Task) -> Result<Vec<Subtask>, AgentError> {
        self.plan_from(&task.start_facelets, &task.id)
    }

    fn plan_from(&mut self, facelets: &str, task_id: &str) -> Result<Vec<Subtask>, AgentError> {
        let memories = self.recall(&format!("plan {facelets}"));
        let req = DecomposeRequest::new(task_id, facelets, memories);
        let resp = self.backend.decompose(&req)?;
        if resp.subtasks.is_empty() {
            return Err(AgentError::PlannerError {
                reason: "planner produced an empty subtask list".to_string(),
            });
        }
        let subs: Vec<Subtask> = resp
            .subtasks
            .iter()
            .map(Subtask::from_spec)
            .collect::<Result<_, _>>()?;
        let last_goal = subs.last().expect("nonempty").goal;
        if last_goal != StagePredicate::Solved {
            return Err(AgentError::PlannerError {
                reason: format!("plan ends at {last_goal} instead of the full solve"),
            });
        }
        if self.config.enable_outer_loop {
            return Ok(subs);
        }
        // Flatten: one subtask carrying the whole move sequence.
        let mut combined = cube_core::Algorithm::new(Vec::new());
        for sub in &subs {
            if let Some(hint) = &sub.hint {
                combined.extend_from(hint);
            }
        }
        let hint = if combined.moves().is_empty() { None } else { Some(combined) };
        Ok(vec![Subtask::flat_solve(hint)])
    }

    /// Execute the task and produce a faithful run report.
    pub fn run(&mut self, task: &Task) -> RunReport {
        let mut report = RunReport {
            task_id: task.id.clone(),
            success: false,
            moves_used: 0,
            steps: Vec::new(),
            replans: 0,
            failure_reason: None,
        };
        let mut state = task.start_state();

        let mut queue: VecDeque<Subtask> = match self.plan_initial(task) {
            Ok(subs) => {
                self.note_plan(&task.id, &subs);
                subs.into()
            }
            Err(e) => {
                report.failure_reason = Some(format!("planner_error: {e}"));
                return report;
            }
        };

        while let Some(mut sub) = queue.pop_front() {
            sub.activate();
            let before = report.steps.len();
            let outcome = self.run_subtask(task, &sub, &mut state, &mut report);
            let (advanced, reflection) = match &outcome {
                SubtaskOutcome::Done { actions } => {
                    sub.finish(true);
                    (true, format!(
                        "subtask {} reached goal {} in {} moves",
                        sub.name, sub.goal, actions
                    ))
                }
                SubtaskOutcome::Failed { actions, why } => {
                    sub.finish(false);
                    let tried: Vec<&str> = report.steps[before..]
                        .iter()
                        .map(|s| s.action.as_str())
                        .collect();
                    (false, format!(
                        "subtask {} failed goal {} after {} moves ({}); tried \"{}\"",
                        sub.name,
                        sub.goal,
                        actions,
                        why.describe(),
                        tried.join(" ")
                    ))
                }
            };
            // Every subtask ends in a reflection; failures carry the action
            // trail so later retrievals can warn the planner off.
            if report.steps.len() > before {
                report
                    .steps
                    .last_mut()
                    .expect("nonempty")
                    .reflection = Some(reflection.clone());
            }
            if self.config.enable_memory {
                self.memory.record(&reflection, MemoryKind::Reflection, 8);
            }

            if advanced {
                continue;
            }

            // Reflection verdict for a failed subtask: replan while the
            // budget for replans lasts (outer loop only), otherwise abort.
            let why = match outcome {
                SubtaskOutcome::Failed { why, .. } => why,
                SubtaskOutcome::Done { .. } => unreachable!("advanced handled above"),
            };
            let move_budget_left = report.moves_used < task.max_moves;
            let can_replan = self.config.enable_outer_loop
                && report.replans < self.config.max_replans
                && !matches!(why, SubtaskFailure::MoveBudget)
                && move_budget_left;
            if can_replan {
                report.replans += 1;
                let facelets = sense(&state);
                match self.plan_from(&facelets, &task.id) {
                    Ok(subs) => {
                        self.note_plan(&task.id, &subs);
                        queue = subs.into();
                        continue;
                    }
                    Err(e) => {
                        report.failure_reason = Some(format!("planner_error: {e}"));
                        return report;
                    }
                }
            }
            report.failure_reason = Some(final_reason(&why, &self.config, report.replans));
            return report;
        }

        // Queue drained: the run succeeded only if the cube really is solved
        // within the allowed move count.
        if state.is_solved() && report.moves_used <= task.max_moves {
            report.success = true;
        } else if report.failure_reason.is_none() {
            report.failure_reason = Some(if state.is_solved() {
                "move_budget_exhausted".to_string()
            } else {
                "plan_completed_unsolved".to_string()
            });
        }
        report
    }

    /// Run one subtask to completion or failure.
    fn run_subtask(
        &mut self,
        task: &Task,
        sub: &Subtask,
        state: &mut CubieState,
        report: &mut RunReport,
    ) -> SubtaskOutcome {
        let budget = self.config.step_budget(sub.expected_moves());
        let mut history: Vec<String> = Vec::new();
        let mut seen: HashMap<String, usize> = HashMap::new();
        let mut facelets = sense(state);
        *seen.entry(facelets.clone()).or_insert(0) += 1;

        loop {
            if sub.goal.satisfied(state) {
                return SubtaskOutcome::Done { actions: history.len() };
            }
            if history.len() >= budget {
                return SubtaskOutcome::Failed {
                    actions: history.len(),
                    why: SubtaskFailure::StepBudget,
                };
            }
            if report.moves_used >= task.max_moves {
                return SubtaskOutcome::Failed {
                    actions: history.len(),
                    why: SubtaskFailure::MoveBudget,
                };
            }

            let memories = self.recall(&format!("goal {} {facelets}", sub.goal));
            let proposal = match self.step_with_retry(sub, &facelets, &history, &memories) {
                Ok(p) => p,
                Err(detail) => {
                    return SubtaskOutcome::Failed {
                        actions: history.len(),
                        why: SubtaskFailure::Protocol(detail),
                    }
                }
            };

            match proposal.action.as_str() {
                "done" => {
                    // The loop head verified the goal does not hold yet, so
                    // a `done` here is the backend giving up early.
                    return SubtaskOutcome::Failed {
                        actions: history.len(),
                        why: SubtaskFailure::PrematureDone,
                    };
                }
                "abort" => {
                    return SubtaskOutcome::Failed {
                        actions: history.len(),
                        why: SubtaskFailure::BackendAbort,
                    };
                }
                token => {
                    let mv = parse_move(token).expect("validated by step_with_retry");
                    let script = compile_script(&cube_core::Algorithm::new(vec![mv]));
                    *state = simulate(&script, state)
                        .expect("compiled scripts always satisfy the rig's grip rules");
                    report.moves_used += 1;
                    facelets = sense(state);
                    report.steps.push(StepRecord {
                        thought: proposal.thought.clone(),
                        reasoning: proposal.reasoning.clone(),
                        action: token.to_string(),
                        reflection: None,
                        state_after: facelets.clone(),
                        tick: self.tick,
                    });
                    self.tick += 1;
                    history.push(token.to_string());
                    if self.config.enable_memory {
                        let importance = proposal.importance.unwrap_or(3);
                        self.memory.record(
                            &format!(
                                "applied {token} toward {}; cube now {facelets}",
                                sub.goal
                            ),
                            MemoryKind::Observation,
                            importance,
                        );
                    }
                    let count = seen.entry(facelets.clone()).or_insert(0);
                    *count += 1;
                    if *count > self.config.repeat_state_threshold {
                        return SubtaskOutcome::Failed {
                            actions: history.len(),
                            why: SubtaskFailure::Deadlock,
                        };
                    }
                }
            }
        }
    }

    /// Ask the backend for a step, allowing a single retry when the response
    /// is an error or fails validation. Two consecutive failures surface as
    /// a protocol failure for the subtask.
    fn step_with_retry(
        &mut self,
        sub: &Subtask,
        facelets: &str,
        history: &[String],
        memories: &[MemoryView],
    ) -> Result<StepResponse, String> {
        let mut last_error = String::new();
        for attempt in 0..2 {
            let ctx = StepContext { subtask: sub, facelets, history, memories };
            match self.backend.step(&ctx) {
                Ok(resp) => match validate_step(&resp) {
                    Ok(()) => {
                        if attempt == 1 && self.config.enable_memory {
                            self.memory.record(
                                &format!("planner recovered after a protocol slip: {last_error}"),
                                MemoryKind::Observation,
                                3,
                            );
                        }
                        return Ok(resp);
                    }
                    Err(detail) => last_error = detail,
                },
                Err(e) => last_error = e.to_string(),
            }
            if attempt == 0 && self.config.enable_memory {
                self.memory.record(
                    &format!("planner step rejected, retrying once: {last_error}"),
                    MemoryKind::Observation,
                    3,
                );
            }
        }
        Err(last_error)
    }

    /// Retrieve memories for a query, if retrieval is enabled and the stream
    /// has anything to offer.
    fn recall(&mut self, query: &str) -> Vec<MemoryView> {
        if !self.config.enable_memory || self.memory.is_empty() {
            return Vec::new();
        }
        let now = self.memory.now();
        match self.memory.retrieve(query, self.config.retrieval_k, now) {
            Ok(objs) => objs
                .iter()
                .map(|o| MemoryView {
                    description: o.description.clone(),
                    importance: o.importance,
                    age_ticks: now.saturating_sub(o.created_at),
                })
                .collect(),
            Err(_) => Vec::new(),
        }
    }

    fn note_plan(&mut self, task_id: &str, subs: &[Subtask]) {
        if !self.config.enable_memory {
            return;
        }
        let names: Vec<&str> = subs.iter().map(|s| s.name.as_str()).collect();
        self.memory.record(
            &format!("plan for task {task_id}: {}", names.join(", ")),
            MemoryKind::Plan,
            5,
        );
    }
}

/// Map a terminal subtask failure to the report's failure reason.
fn final_reason(why: &SubtaskFailure, config: &RunConfig, replans: usize) -> String {
    if matches!(why, SubtaskFailure::MoveBudget) {
        return "move_budget_exhausted".to_string();
    }
    if config.enable_outer_loop && replans >= config.max_replans {
        return "replan_exhausted".to_string();
    }
    why.reason().to_string()
}

/// Check a step response against the wire contract.
fn validate_step(resp: &StepResponse) -> Result<(), String> {
    match resp.action.as_str() {
        "done" | "abort" => {}
        token => {
            parse_move(token).map_err(|e| format!("unrecognised action {token:?}: {e}"))?;
        }
    }
    if let Some(importance) = resp.importance {
        if !(1..=10).contains(&importance) {
            return Err(format!("importance {importance} outside 1..=10"));
        }
    }
    Ok(())
}

/// Photograph the cube from two opposite corners and reconstruct the full
/// sticker layout. Two opposite viewpoints cover all six faces, so the
/// reconstruction is always complete.
pub(crate) fn sense(state: &CubieState) -> String {
    let views: [Observation; 2] = [
        observe(state, ObservationMode::Partial, Viewpoint::Urf),
        observe(state, ObservationMode::Partial, Viewpoint::Urf.opposite()),
    ];
    match reconstruct(&views).expect("views of one state never conflict") {
        Reconstruction::Complete(f) => f.to_string_form(),
        Reconstruction::Incomplete { missing } => {
            unreachable!("opposite viewpoints cover every sticker; missing {missing:?}")
        }
    }
}

/// Convenience for tests and tools: the facelet string of a state.
pub fn facelets_of(state: &CubieState) -> String {
    state.to_facelets().to_string_form()
}
