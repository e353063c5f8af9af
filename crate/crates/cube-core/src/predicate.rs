use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cubie::{CubieState, SOLVED};
use crate::error::CubeError;

/// Named milestones of a layer-by-layer solve, ordered from weakest to
/// strongest: each stage implies every earlier one. Checks are made on the
/// piece arrays and so ignore whole-cube orientation, like
/// [`CubieState::is_solved`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StagePredicate {
    /// The four bottom-layer edges are home and unflipped.
    Cross,
    /// Cross plus the four bottom-layer corners home and untwisted.
    FirstLayer,
    /// First layer plus the four middle-layer edges home and unflipped.
    FirstTwoLayers,
    /// First two layers plus every top-layer piece oriented (the top face
    /// shows a single color), though top pieces may still be permuted.
    LastLayerOriented,
    /// Every piece home and oriented.
    Solved,
}

/// All stages in solve order.
pub const STAGES: [StagePredicate; 5] = [
    StagePredicate::Cross,
    StagePredicate::FirstLayer,
    StagePredicate::FirstTwoLayers,
    StagePredicate::LastLayerOriented,
    StagePredicate::Solved,
];

impl StagePredicate {
    pub fn name(self) -> &'static str {
        match self {
            StagePredicate::Cross => "cross",
            StagePredicate::FirstLayer => "first_layer",
            StagePredicate::FirstTwoLayers => "first_two_layers",
            StagePredicate::LastLayerOriented => "last_layer_oriented",
            StagePredicate::Solved => "solved",
        }
    }

    pub fn satisfied(self, state: &CubieState) -> bool {
        let a = state.arrays();
        // Bottom-layer edge slots are 4..8, middle-layer 8..12; bottom-corner
        // slots are 4..8. Top slots are 0..4 for both piece kinds.
        let cross = (4..8).all(|i| a.ep[i] as usize == i && a.eo[i] == 0);
        match self {
            StagePredicate::Cross => cross,
            StagePredicate::FirstLayer => {
                cross && (4..8).all(|i| a.cp[i] as usize == i && a.co[i] == 0)
            }
            StagePredicate::FirstTwoLayers => {
                StagePredicate::FirstLayer.satisfied(state)
                    && (8..12).all(|i| a.ep[i] as usize == i && a.eo[i] == 0)
            }
            StagePredicate::LastLayerOriented => {
                StagePredicate::FirstTwoLayers.satisfied(state)
                    && (0..4).all(|i| a.co[i] == 0)
                    && (0..4).all(|i| a.eo[i] == 0)
            }
            StagePredicate::Solved => a == SOLVED,
        }
    }
}

impl fmt::Display for StagePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StagePredicate {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        STAGES
            .into_iter()
            .find(|stage| stage.name() == s)
            .ok_or_else(|| CubeError::UnknownPredicate(s.to_string()))
    }
}

impl Serialize for StagePredicate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for StagePredicate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
