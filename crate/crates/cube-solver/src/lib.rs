//! Solvers, scramblers, and benchmark task generation for the cube engine.
//!
//! Three solving routes are exposed, each with a different contract:
//!
//! * [`solve_staged`] mirrors a human layer-by-layer method and reports a
//!   plan split into named stages with per-step template labels.
//! * [`solve_fast`] searches through an intermediate subgroup and returns a
//!   short (not necessarily minimal) solution under a wall-clock budget.
//! * [`optimal_length_bounded`] proves exact distances up to a small depth
//!   cap, for grading scrambles rather than solving hard states.
//!
//! All searches run on precomputed coordinate tables shared process-wide;
//! the first call pays the build cost (or loads a cached copy) and later
//! calls reuse it.

mod coords;
mod error;
mod optimal;
mod scramble;
mod staged;
mod tables;
mod tasks;
mod two_phase;

pub use error::SolverError;
pub use optimal::{optimal_length_bounded, OptimalLength};
pub use scramble::scramble;
pub use staged::{solve_staged, StagePlan, StageStep, TEMPLATE_NAMES};
pub use tables::PruningTables;
pub use tasks::{generate_task, Level, Task};
pub use two_phase::solve_fast;

use cube_core::{Algorithm, Face, Frame, Move};

/// Rewrites internal move indices (computed on normalized piece arrays) into
/// the caller's labeling. A state viewed in a rotated frame names faces by
/// what the observer sees, so each turned face is mapped through the frame
/// before formatting.
pub(crate) fn observer_algorithm(frame: Frame, move_indices: &[usize]) -> Algorithm {
    let mut alg = Algorithm::new(Vec::new());
    for &m in move_indices {
        let face = Face::from_index(m / 3);
        let face = if frame.is_identity() { face } else { frame.slot_showing(face) };
        alg.push(Move::face(face, (m % 3 + 1) as u8));
    }
    alg
}
