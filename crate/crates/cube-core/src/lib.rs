//! Exact Rubik's cube engine: cubie-level state, Singmaster notation, facelet
//! serialization and stage predicates.
//!
//! State is kept at the cubie level (corner/edge permutations plus
//! orientations) so group structure and solvability invariants are cheap to
//! enforce. Whole-cube rotations (`x`, `y`, `z`) never touch the piece arrays;
//! they only update a frame that relabels which underlying face each
//! face-letter currently names. Face turns are looked up through that frame,
//! which keeps solver inputs rotation-normalized.

mod cubie;
mod error;
mod facelet;
mod frame;
mod moves;
pub mod notation;
mod predicate;
mod render;

pub use cubie::{conserved_quantities, CubieState};
pub use error::CubeError;
pub use facelet::FaceletState;
pub use frame::Frame;
pub use moves::{Axis, Face, Move, MoveTarget, AXES, FACES};
pub use notation::{
    canonicalize, format_algorithm, invert, parse_algorithm, parse_move, Algorithm, ParseError,
};
pub use predicate::{StagePredicate, STAGES};
pub use render::render_net;
