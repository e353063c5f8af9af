//! Camera-style observations and state reconstruction.

use std::fmt;

use cube_core::{CubieState, Face, FaceletState};

use crate::error::RigError;

/// Camera position at one of the cube's eight corners; it sees the three
/// faces meeting there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Viewpoint {
    Urf,
    Ufl,
    Ulb,
    Ubr,
    Dfr,
    Dlf,
    Dbl,
    Drb,
}

pub const VIEWPOINTS: [Viewpoint; 8] = [
    Viewpoint::Urf,
    Viewpoint::Ufl,
    Viewpoint::Ulb,
    Viewpoint::Ubr,
    Viewpoint::Dfr,
    Viewpoint::Dlf,
    Viewpoint::Dbl,
    Viewpoint::Drb,
];

impl Viewpoint {
    /// The three faces visible from this corner.
    pub fn faces(self) -> [Face; 3] {
        match self {
            Viewpoint::Urf => [Face::U, Face::R, Face::F],
            Viewpoint::Ufl => [Face::U, Face::F, Face::L],
            Viewpoint::Ulb => [Face::U, Face::L, Face::B],
            Viewpoint::Ubr => [Face::U, Face::B, Face::R],
            Viewpoint::Dfr => [Face::D, Face::F, Face::R],
            Viewpoint::Dlf => [Face::D, Face::L, Face::F],
            Viewpoint::Dbl => [Face::D, Face::B, Face::L],
            Viewpoint::Drb => [Face::D, Face::R, Face::B],
        }
    }

    /// The diagonally opposite corner; together they see all six faces.
    pub fn opposite(self) -> Viewpoint {
        match self {
            Viewpoint::Urf => Viewpoint::Dbl,
            Viewpoint::Ufl => Viewpoint::Drb,
            Viewpoint::Ulb => Viewpoint::Dfr,
            Viewpoint::Ubr => Viewpoint::Dlf,
            Viewpoint::Dfr => Viewpoint::Ulb,
            Viewpoint::Dlf => Viewpoint::Ubr,
            Viewpoint::Dbl => Viewpoint::Urf,
            Viewpoint::Drb => Viewpoint::Ufl,
        }
    }
}

impl fmt::Display for Viewpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let faces = self.faces();
        write!(f, "{}{}{}", faces[0].letter(), faces[1].letter(), faces[2].letter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObservationMode {
    /// All 54 stickers.
    Full,
    /// The 27 stickers of the three faces visible from the viewpoint.
    Partial,
}

/// A set of sticker readings taken from one camera position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observation {
    pub mode: ObservationMode,
    pub viewpoint: Viewpoint,
    /// `(position, color letter)` pairs in position order. Positions index
    /// the 54-sticker string: faces U, R, F, D, L, B, nine row-major each.
    pub stickers: Vec<(u8, char)>,
}

/// Reads the state from a camera position: every sticker in full mode, the
/// three visible faces' 27 stickers in partial mode.
pub fn observe(state: &CubieState, mode: ObservationMode, viewpoint: Viewpoint) -> Observation {
    let colors = *state.to_facelets().stickers();
    let positions: Vec<usize> = match mode {
        ObservationMode::Full => (0..54).collect(),
        ObservationMode::Partial => viewpoint
            .faces()
            .iter()
            .flat_map(|f| (0..9).map(move |i| f.index() * 9 + i))
            .collect(),
    };
    let mut stickers: Vec<(u8, char)> =
        positions.into_iter().map(|p| (p as u8, colors[p].letter())).collect();
    stickers.sort_unstable();
    Observation { mode, viewpoint, stickers }
}

/// Outcome of merging observations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reconstruction {
    /// Every sticker was covered and the merge forms a well-formed state.
    Complete(FaceletState),
    /// Some stickers were never observed.
    Incomplete { missing: usize },
}

/// Merges observations of one unchanged state back into full facelets.
/// Returns [`Reconstruction::Incomplete`] while stickers remain uncovered
/// and [`RigError::ConflictError`] when readings disagree, either directly
/// at a sticker or by merging into an impossible sticker pattern.
pub fn reconstruct(observations: &[Observation]) -> Result<Reconstruction, RigError> {
    let mut merged: [Option<char>; 54] = [None; 54];
    for obs in observations {
        for &(position, color) in &obs.stickers {
            let slot = &mut merged[position as usize];
            match *slot {
                None => *slot = Some(color),
                Some(existing) if existing != color => {
                    return Err(RigError::ConflictError(format!(
                        "sticker {position} reported as both {existing} and {color}"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let missing = merged.iter().filter(|s| s.is_none()).count();
    if missing > 0 {
        return Ok(Reconstruction::Incomplete { missing });
    }
    let text: String = merged.iter().map(|s| s.unwrap()).collect();
    let facelets = text
        .parse::<FaceletState>()
        .map_err(|e| RigError::ConflictError(format!("merged stickers are impossible: {e}")))?;
    Ok(Reconstruction::Complete(facelets))
}
