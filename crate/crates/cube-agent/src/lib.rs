//! A planner-executor agent that solves Rubik's cubes through a simulated
//! robot rig.
//!
//! The agent runs two nested loops. The **outer loop** asks a planning
//! backend to decompose a task into goal-directed subtasks, executes them in
//! order, and reflects after each one — advancing, replanning from the
//! current state, or aborting. The **inner loop** executes a single subtask
//! step by step: retrieve relevant memories, ask the backend for the next
//! action, drive it through the rig, observe the resulting stickers, and
//! record the step.
//!
//! Backends are pluggable ([`PlannerBackend`]): a perfect in-process oracle,
//! a seeded noisy variant that models an imperfect planner, and a bridge to
//! external planners over HTTP or line-delimited JSON on a child process's
//! stdio.
//!
//! Every run produces a [`RunReport`] that replays deterministically:
//! applying the recorded actions to the task's start state reproduces each
//! recorded observation exactly ([`verify_report`]).

mod agent;
mod backend;
mod config;
mod error;
mod report;
mod subtask;
mod wire;

pub use agent::{facelets_of, Agent};
pub use backend::{
    external_backend, noisy_backend, oracle_backend, ExternalBackend, NoisyBackend,
    OracleBackend, PlannerBackend, StepContext,
};
pub use config::{backend_seed, RunConfig};
pub use error::AgentError;
pub use report::{verify_report, RunReport, StepRecord};
pub use subtask::{Subtask, SubtaskStatus};
pub use wire::{
    DecomposeRequest, DecomposeResponse, MemoryView, StepRequest, StepResponse, SubtaskRef,
    SubtaskSpec, HISTORY_WINDOW,
};
