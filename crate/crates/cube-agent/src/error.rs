use thiserror::Error;

/// Failures surfaced by planner backends and plan handling. Task-level
/// failures are never raised as errors; they are recorded in the run report.
#[derive(Debug, Error)]
pub enum AgentError {
    /// A backend produced output that does not fit the planning contract:
    /// an empty queue, an unknown goal token, a hint that does not parse, or
    /// a queue that does not end at the solved goal.
    #[error("planner output rejected: {reason}")]
    PlannerError { reason: String },

    /// An external backend could not be reached at all.
    #[error("backend unreachable: {detail}")]
    BackendUnreachable { detail: String },

    /// A backend answered, but not in the wire schema, or with an action
    /// token outside the move alphabet.
    #[error("backend protocol violation: {detail}")]
    ProtocolError { detail: String },
}
