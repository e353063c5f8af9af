use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cubie::{validate, Arrays, CubieState, SOLVED};
use crate::error::CubeError;
use crate::frame::Frame;
use crate::moves::{Face, FACES};

// Sticker indexing: faces in U, R, F, D, L, B order, nine row-major stickers
// each. Rows run top-to-bottom in the conventional unfolded net (U seen from
// above with B at the top, D seen from the front tilted down, B seen from
// behind).

/// Facelet positions of each corner slot, U/D sticker first, then the two
/// side stickers in clockwise order around the corner.
#[rustfmt::skip]
pub(crate) const CORNER_FACELETS: [[usize; 3]; 8] = [
    [ 8,  9, 20], // URF: U8 R0 F2
    [ 6, 18, 38], // UFL: U6 F0 L2
    [ 0, 36, 47], // ULB: U0 L0 B2
    [ 2, 45, 11], // UBR: U2 B0 R2
    [29, 26, 15], // DFR: D2 F8 R6
    [27, 44, 24], // DLF: D0 L8 F6
    [33, 53, 42], // DBL: D6 B8 L6
    [35, 17, 51], // DRB: D8 R8 B6
];

/// Home colors of each corner piece, in the same sticker order.
#[rustfmt::skip]
pub(crate) const CORNER_COLORS: [[Face; 3]; 8] = [
    [Face::U, Face::R, Face::F],
    [Face::U, Face::F, Face::L],
    [Face::U, Face::L, Face::B],
    [Face::U, Face::B, Face::R],
    [Face::D, Face::F, Face::R],
    [Face::D, Face::L, Face::F],
    [Face::D, Face::B, Face::L],
    [Face::D, Face::R, Face::B],
];

/// Facelet positions of each edge slot; the first sticker is the one whose
/// orientation defines flip 0.
#[rustfmt::skip]
pub(crate) const EDGE_FACELETS: [[usize; 2]; 12] = [
    [ 5, 10], // UR
    [ 7, 19], // UF
    [ 3, 37], // UL
    [ 1, 46], // UB
    [32, 16], // DR
    [28, 25], // DF
    [30, 43], // DL
    [34, 52], // DB
    [23, 12], // FR
    [21, 41], // FL
    [50, 39], // BL
    [48, 14], // BR
];

#[rustfmt::skip]
pub(crate) const EDGE_COLORS: [[Face; 2]; 12] = [
    [Face::U, Face::R],
    [Face::U, Face::F],
    [Face::U, Face::L],
    [Face::U, Face::B],
    [Face::D, Face::R],
    [Face::D, Face::F],
    [Face::D, Face::L],
    [Face::D, Face::B],
    [Face::F, Face::R],
    [Face::F, Face::L],
    [Face::B, Face::L],
    [Face::B, Face::R],
];

/// Sticker-level view of a cube state: 54 colors in face order U, R, F, D,
/// L, B, row-major within each face. Only well-formed sticker fields can be
/// constructed; reachability is checked when converting to `CubieState`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceletState {
    stickers: [Face; 54],
}

impl FaceletState {
    pub fn stickers(&self) -> &[Face; 54] {
        &self.stickers
    }

    /// Parses a 54-character string, checking shape only: length, alphabet,
    /// nine stickers per color, pairwise-distinct centers.
    pub fn parse(text: &str) -> Result<FaceletState, CubeError> {
        let bytes = text.as_bytes();
        if bytes.len() != 54 {
            return Err(CubeError::MalformedFacelets(format!(
                "expected 54 stickers, got {}",
                bytes.len()
            )));
        }
        let mut stickers = [Face::U; 54];
        let mut counts = [0usize; 6];
        for (i, &b) in bytes.iter().enumerate() {
            let face = Face::from_letter(b as char).ok_or_else(|| {
                CubeError::MalformedFacelets(format!(
                    "sticker {} is `{}`, expected one of URFDLB",
                    i, b as char
                ))
            })?;
            stickers[i] = face;
            counts[face.index()] += 1;
        }
        for face in FACES {
            if counts[face.index()] != 9 {
                return Err(CubeError::MalformedFacelets(format!(
                    "color {} appears {} times, expected 9",
                    face.letter(),
                    counts[face.index()]
                )));
            }
        }
        let mut center_seen = [false; 6];
        for d in 0..6 {
            let c = stickers[9 * d + 4];
            if center_seen[c.index()] {
                return Err(CubeError::MalformedFacelets(format!(
                    "face center {} appears on more than one face",
                    c.letter()
                )));
            }
            center_seen[c.index()] = true;
        }
        Ok(FaceletState { stickers })
    }

    pub fn to_string_form(&self) -> String {
        self.stickers.iter().map(|f| f.letter()).collect()
    }
}

impl fmt::Display for FaceletState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for face in &self.stickers {
            write!(f, "{}", face.letter())?;
        }
        Ok(())
    }
}

impl FromStr for FaceletState {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FaceletState::parse(s)
    }
}

impl Serialize for FaceletState {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string_form())
    }
}

impl<'de> Deserialize<'de> for FaceletState {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        FaceletState::parse(&text).map_err(serde::de::Error::custom)
    }
}

impl CubieState {
    /// Sticker field of this state as seen by an observer, including the
    /// accumulated whole-cube orientation.
    pub fn to_facelets(&self) -> FaceletState {
        let normalized = arrays_to_stickers(&self.arrays());
        let perm = self.frame().sticker_perm();
        let mut out = [Face::U; 54];
        for i in 0..54 {
            out[i] = normalized[perm[i] as usize];
        }
        FaceletState { stickers: out }
    }

    /// Reads a sticker field back into cubie form. The centers determine the
    /// frame orientation; the remaining stickers must decode into a reachable
    /// piece arrangement.
    pub fn from_facelets(f: &FaceletState) -> Result<CubieState, CubeError> {
        let mut map = [Face::U; 6];
        for d in 0..6 {
            map[d] = f.stickers[9 * d + 4];
        }
        let frame = Frame::from_face_map(&map).ok_or_else(|| {
            CubeError::UnsolvableState(
                "face centers are not arranged as a rigid rotation of the cube".into(),
            )
        })?;

        let perm = frame.sticker_perm();
        let mut normalized = [Face::U; 54];
        for i in 0..54 {
            normalized[perm[i] as usize] = f.stickers[i];
        }

        let arrays = stickers_to_arrays(&normalized)?;
        validate(&arrays)?;
        Ok(CubieState::from_arrays(arrays, frame))
    }
}

fn arrays_to_stickers(a: &Arrays) -> [Face; 54] {
    let mut out = [Face::U; 54];
    for d in 0..6 {
        out[9 * d + 4] = Face::from_index(d);
    }
    for slot in 0..8 {
        let piece = a.cp[slot] as usize;
        let ori = a.co[slot] as usize;
        for n in 0..3 {
            out[CORNER_FACELETS[slot][(n + ori) % 3]] = CORNER_COLORS[piece][n];
        }
    }
    for slot in 0..12 {
        let piece = a.ep[slot] as usize;
        let ori = a.eo[slot] as usize;
        for n in 0..2 {
            out[EDGE_FACELETS[slot][(n + ori) % 2]] = EDGE_COLORS[piece][n];
        }
    }
    out
}

fn stickers_to_arrays(s: &[Face; 54]) -> Result<Arrays, CubeError> {
    let mut arrays = SOLVED;
    for slot in 0..8 {
        let read = [
            s[CORNER_FACELETS[slot][0]],
            s[CORNER_FACELETS[slot][1]],
            s[CORNER_FACELETS[slot][2]],
        ];
        // The U/D-colored sticker position gives the twist; the following
        // sticker identifies the piece.
        let ori = (0..3)
            .find(|&o| read[o] == Face::U || read[o] == Face::D)
            .ok_or_else(|| {
                CubeError::UnsolvableState(format!(
                    "corner slot {slot} shows no U or D sticker"
                ))
            })?;
        let side = [read[(ori + 1) % 3], read[(ori + 2) % 3]];
        let piece = CORNER_COLORS
            .iter()
            .position(|c| c[0] == read[ori] && c[1] == side[0] && c[2] == side[1])
            .ok_or_else(|| {
                CubeError::UnsolvableState(format!(
                    "corner slot {slot} shows colors of no real corner piece"
                ))
            })?;
        arrays.cp[slot] = piece as u8;
        arrays.co[slot] = ori as u8;
    }
    for slot in 0..12 {
        let read = [s[EDGE_FACELETS[slot][0]], s[EDGE_FACELETS[slot][1]]];
        let mut found = None;
        for (piece, colors) in EDGE_COLORS.iter().enumerate() {
            if read == *colors {
                found = Some((piece, 0));
                break;
            }
            if read == [colors[1], colors[0]] {
                found = Some((piece, 1));
                break;
            }
        }
        let (piece, ori) = found.ok_or_else(|| {
            CubeError::UnsolvableState(format!(
                "edge slot {slot} shows colors of no real edge piece"
            ))
        })?;
        arrays.ep[slot] = piece as u8;
        arrays.eo[slot] = ori as u8;
    }
    Ok(arrays)
}
