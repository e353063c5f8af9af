//! A minimal external planner speaking the line-JSON wire protocol.
//!
//! Reads one JSON request per line on stdin and writes one JSON response per
//! line on stdout. Planning is delegated to the same staged decomposition
//! the in-process oracle uses, so this binary doubles as a reference planner
//! and as a fixture for exercising the external-backend transport.
//!
//! Flags (for protocol testing):
//!
//! * `--garble-first-step`: answer the first step request with an action
//!   token that is not a move, then behave normally.
//! * `--always-action TOKEN`: answer every step request with TOKEN.

use std::io::{BufRead, Write};

use cube_agent::{
    DecomposeResponse, MemoryView, StepResponse, SubtaskRef, SubtaskSpec,
};
use cube_core::{CubieState, FaceletState, StagePredicate};
use cube_solver::solve_staged;
use serde::Deserialize;

/// Incoming requests, distinguished by their `kind` tag.
#[derive(Deserialize)]
#[serde(tag = "kind")]
enum Request {
    #[serde(rename = "decompose")]
    Decompose { facelets: String },
    #[serde(rename = "step")]
    Step {
        subtask: SubtaskRef,
        facelets: String,
        history: Vec<String>,
        #[serde(default)]
        #[allow(dead_code)]
        memories: Vec<MemoryView>,
    },
}

fn decompose(facelets: &str) -> DecomposeResponse {
    let state = parse(facelets);
    let plan = solve_staged(&state);
    let mut subtasks: Vec<SubtaskSpec> = plan
        .stages
        .iter()
        .map(|stage| SubtaskSpec {
            name: stage.name.to_string(),
            goal: stage.goal.name().to_string(),
            hint: Some(stage.algorithm.to_string()),
        })
        .collect();
    match subtasks.last_mut() {
        Some(last) => last.goal = "solved".to_string(),
        None => subtasks.push(SubtaskSpec {
            name: "solved".to_string(),
            goal: "solved".to_string(),
            hint: None,
        }),
    }
    DecomposeResponse { subtasks }
}

fn parse(facelets: &str) -> CubieState {
    let f = FaceletState::parse(facelets).expect("agent sends well-formed facelets");
    CubieState::from_facelets(&f).expect("agent sends valid cube states")
}

/// Follow the plan implied by the request alone: the number of actions
/// already taken indexes into the staged plan for the *original* state.
/// Since this planner is stateless across lines, it re-derives the plan from
/// the current state each time: the next move is simply the first move of
/// the staged plan for whatever state it is shown, scoped to the requested
/// goal.
fn step(subtask: &SubtaskRef, facelets: &str, history: &[String]) -> StepResponse {
    let state = parse(facelets);
    let goal: StagePredicate = subtask.goal.parse().expect("goal token from the stage vocabulary");
    if goal.satisfied(&state) {
        return StepResponse {
            thought: "the goal condition holds".to_string(),
            reasoning: "declaring completion".to_string(),
            action: "done".to_string(),
            importance: None,
        };
    }
    let plan = solve_staged(&state);
    for stage in &plan.stages {
        if let Some(mv) = stage.algorithm.moves().first() {
            return StepResponse {
                thought: format!("work toward {}", subtask.goal),
                reasoning: format!(
                    "{} actions taken; the staged plan for this state opens with {mv}",
                    history.len()
                ),
                action: mv.to_string(),
                importance: None,
            };
        }
    }
    // No stage needs work yet the goal is unsatisfied: cannot happen for the
    // stage vocabulary, but answer something parseable anyway.
    StepResponse {
        thought: "no move found".to_string(),
        reasoning: "the staged plan is empty".to_string(),
        action: "abort".to_string(),
        importance: None,
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut garble_first_step = false;
    let mut always_action: Option<String> = None;
    let mut i = 0;
    while i < args.len() {
        match args[i].as_str() {
            "--garble-first-step" => garble_first_step = true,
            "--always-action" => {
                i += 1;
                always_action = Some(args.get(i).expect("--always-action needs a value").clone());
            }
            other => {
                eprintln!("unknown flag {other}");
                std::process::exit(2);
            }
        }
        i += 1;
    }

    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut garbled_already = false;
    for line in stdin.lock().lines() {
        let line = match line {
            Ok(l) => l,
            Err(_) => break,
        };
        if line.trim().is_empty() {
            continue;
        }
        let request: Request = match serde_json::from_str(&line) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("bad request line: {e}");
                std::process::exit(2);
            }
        };
        let response = match request {
            Request::Decompose { facelets } => {
                serde_json::to_string(&decompose(&facelets)).expect("serializes")
            }
            Request::Step { subtask, facelets, history, .. } => {
                let mut resp = if let Some(action) = &always_action {
                    StepResponse {
                        thought: "scripted".to_string(),
                        reasoning: "fixed action".to_string(),
                        action: action.clone(),
                        importance: None,
                    }
                } else {
                    step(&subtask, &facelets, &history)
                };
                if garble_first_step && !garbled_already {
                    garbled_already = true;
                    resp.action = "Q9".to_string();
                }
                serde_json::to_string(&resp).expect("serializes")
            }
        };
        writeln!(out, "{response}").expect("stdout open");
        out.flush().expect("stdout flushes");
    }
}
