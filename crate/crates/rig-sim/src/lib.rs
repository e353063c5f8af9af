//! Simulated robot rig: turns algorithms into gripper-level scripts, executes
//! them on an exact cube model, and produces camera-style observations.
//!
//! [`compile_script`] lowers a move sequence to grip/rotate/release
//! primitives (whole-cube rotations become reorientations), [`simulate`]
//! executes a script while enforcing the bracketing discipline, and
//! [`observe`]/[`reconstruct`] model sticker visibility from the eight corner
//! viewpoints, merging partial views back into a full state.

mod error;
mod observe;
mod script;

pub use error::RigError;
pub use observe::{
    observe, reconstruct, Observation, ObservationMode, Reconstruction, Viewpoint, VIEWPOINTS,
};
pub use script::{compile_script, simulate, Primitive, RobotScript};
