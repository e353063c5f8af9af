//! Reading, printing and normalizing move sequences.
//!
//! The token alphabet is the nine base letters `U R F D L B x y z`, each
//! optionally suffixed with `2` (half turn) or `'` (counterclockwise).
//! Face letters turn one layer; `x`, `y`, `z` rotate the whole cube about
//! the R, U and F axes respectively and permute no pieces.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::frame::Frame;
use crate::moves::{Face, Move, MoveTarget};

/// A move-token rejected while reading an algorithm string. The offset is a
/// byte index into the original input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad token at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// A sequence of moves. Prints and parses as whitespace-separated tokens,
/// e.g. `"R U R' U'"`, and serializes as that string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Algorithm(Vec<Move>);

impl Algorithm {
    pub fn new(moves: Vec<Move>) -> Algorithm {
        Algorithm(moves)
    }

    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    pub fn into_moves(self) -> Vec<Move> {
        self.0
    }

    pub fn push(&mut self, mv: Move) {
        self.0.push(mv);
    }

    pub fn extend_from(&mut self, other: &Algorithm) {
        self.0.extend_from_slice(&other.0);
    }
}

impl Deref for Algorithm {
    type Target = [Move];

    fn deref(&self) -> &[Move] {
        &self.0
    }
}

impl From<Vec<Move>> for Algorithm {
    fn from(moves: Vec<Move>) -> Algorithm {
        Algorithm(moves)
    }
}

impl FromIterator<Move> for Algorithm {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Algorithm {
        Algorithm(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Algorithm {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl IntoIterator for Algorithm {
    type Item = Move;
    type IntoIter = std::vec::IntoIter<Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_algorithm(&self.0))
    }
}

impl FromStr for Algorithm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_algorithm(s)
    }
}

impl Serialize for Algorithm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Algorithm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_algorithm(&text).map_err(serde::de::Error::custom)
    }
}

/// Reads one move token: base letter plus optional `2` or `'` suffix.
pub fn parse_move(token: &str) -> Result<Move, ParseError> {
    parse_token(token, 0)
}

fn parse_token(token: &str, offset: usize) -> Result<Move, ParseError> {
    let mut chars = token.chars();
    let base = chars.next().ok_or_else(|| ParseError {
        offset,
        message: "empty token".into(),
    })?;
    let turns = match chars.as_str() {
        "" => 1,
        "2" => 2,
        "'" => 3,
        suffix => {
            return Err(ParseError {
                offset: offset + base.len_utf8(),
                message: format!("unknown suffix `{suffix}`, expected `2` or `'`"),
            })
        }
    };
    if let Some(face) = Face::from_letter(base) {
        return Ok(Move::face(face, turns));
    }
    if let Some(axis) = crate::moves::Axis::from_letter(base) {
        return Ok(Move::axis(axis, turns));
    }
    Err(ParseError {
        offset,
        message: format!("unknown base letter `{base}`, expected one of URFDLBxyz"),
    })
}

/// Reads a whitespace-separated algorithm string. The empty (or
/// all-whitespace) string is the empty algorithm.
pub fn parse_algorithm(text: &str) -> Result<Algorithm, ParseError> {
    let mut moves = Vec::new();
    let mut rest = text;
    let mut consumed = 0;
    loop {
        let trimmed = rest.trim_start();
        consumed += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return Ok(Algorithm(moves));
        }
        let end = trimmed
            .find(char::is_whitespace)
            .unwrap_or(trimmed.len());
        moves.push(parse_token(&trimmed[..end], consumed)?);
        consumed += end;
        rest = &trimmed[end..];
    }
}

/// Prints moves as whitespace-separated tokens.
pub fn format_algorithm(moves: &[Move]) -> String {
    let mut out = String::new();
    for (i, mv) in moves.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&mv.to_string());
    }
    out
}

/// The sequence that undoes `alg`: reversed order, each move inverted.
pub fn invert(alg: &Algorithm) -> Algorithm {
    Algorithm(alg.0.iter().rev().map(|mv| mv.inverse()).collect())
}

/// Rewrites an algorithm into an equivalent shorter form:
///
/// 1. Whole-cube rotations are folded away by relabeling the face turns that
///    follow them, exactly as applying the moves would. The result contains
///    face turns only and produces the same sticker pattern as the input
///    (if the input's rotations did not cancel out, the pattern is reached in
///    a different hand orientation, which no piece-level check can see).
/// 2. Runs of turns of the same face are combined mod 4, including across a
///    single intervening turn of the opposite face (which commutes with
///    them); vanishing turns are dropped.
///
/// The result never contains two adjacent turns of one face, nor two turns
/// of one face separated only by a turn of the opposite face.
pub fn canonicalize(alg: &Algorithm) -> Algorithm {
    let mut frame = Frame::IDENTITY;
    let mut stack: Vec<(Face, u8)> = Vec::new();
    for mv in alg {
        match mv.target() {
            MoveTarget::Axis(axis) => frame = frame.then_axis(axis, mv.turns()),
            MoveTarget::Face(face) => push_merged(&mut stack, frame.face_of(face), mv.turns()),
        }
    }
    Algorithm(
        stack
            .into_iter()
            .map(|(face, turns)| Move::face(face, turns))
            .collect(),
    )
}

// Merging never needs to cascade: the stack never holds two entries of one
// face adjacent, nor an (f, opposite, f) triple, so removing a fully
// cancelled entry cannot bring two mergeable entries together.
fn push_merged(stack: &mut Vec<(Face, u8)>, face: Face, turns: u8) {
    let turns = turns % 4;
    if turns == 0 {
        return;
    }
    if let Some(&(top_face, top_turns)) = stack.last() {
        if top_face == face {
            stack.pop();
            let merged = (top_turns + turns) % 4;
            if merged != 0 {
                stack.push((face, merged));
            }
            return;
        }
        if top_face == face.opposite() && stack.len() >= 2 {
            let below = stack[stack.len() - 2];
            if below.0 == face {
                let top = stack.pop().unwrap();
                stack.pop();
                let merged = (below.1 + turns) % 4;
                if merged != 0 {
                    stack.push((face, merged));
                }
                stack.push(top);
                return;
            }
        }
    }
    stack.push((face, turns));
}
