//! Robot primitives, algorithm lowering, and script execution.

use cube_core::{Algorithm, Axis, CubieState, Face, Move, MoveTarget};
use serde::{Deserialize, Serialize};

use crate::error::RigError;

/// One rig action. A face turn is always the bracketed triple grip, rotate,
/// release; a whole-cube reorientation happens with every face released.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op")]
pub enum Primitive {
    #[serde(rename = "GRIP")]
    Grip {
        #[serde(with = "face_letter")]
        face: Face,
    },
    #[serde(rename = "ROTATE")]
    Rotate {
        #[serde(with = "face_letter")]
        face: Face,
        /// Quarter turns, `1..=3`.
        q: u8,
    },
    #[serde(rename = "RELEASE")]
    Release {
        #[serde(with = "face_letter")]
        face: Face,
    },
    #[serde(rename = "REORIENT")]
    Reorient {
        #[serde(with = "axis_letter")]
        axis: Axis,
        /// Quarter turns, `1..=3`.
        q: u8,
    },
}

/// An ordered list of primitives, serialized as one JSON object per line.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RobotScript {
    primitives: Vec<Primitive>,
}

impl RobotScript {
    pub fn new(primitives: Vec<Primitive>) -> RobotScript {
        RobotScript { primitives }
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.primitives
    }

    pub fn len(&self) -> usize {
        self.primitives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primitives.is_empty()
    }

    /// One primitive per line, e.g. `{"op":"ROTATE","face":"U","q":1}`.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for p in &self.primitives {
            out.push_str(&serde_json::to_string(p).expect("plain enum serializes"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<RobotScript, RigError> {
        let mut primitives = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let p: Primitive = serde_json::from_str(line)
                .map_err(|e| RigError::MalformedScript { line: i + 1, reason: e.to_string() })?;
            if let Primitive::Rotate { q, .. } | Primitive::Reorient { q, .. } = p {
                if !(1..=3).contains(&q) {
                    return Err(RigError::MalformedScript {
                        line: i + 1,
                        reason: format!("quarter turns {q} outside 1..=3"),
                    });
                }
            }
            primitives.push(p);
        }
        Ok(RobotScript { primitives })
    }
}

/// Lowers an algorithm to rig primitives: each face turn becomes its
/// bracketed grip/rotate/release triple, each whole-cube rotation a single
/// reorientation.
pub fn compile_script(alg: &Algorithm) -> RobotScript {
    let mut primitives = Vec::with_capacity(alg.moves().len() * 3);
    for &mv in alg.moves() {
        match mv.target() {
            MoveTarget::Face(face) => {
                primitives.push(Primitive::Grip { face });
                primitives.push(Primitive::Rotate { face, q: mv.turns() });
                primitives.push(Primitive::Release { face });
            }
            MoveTarget::Axis(axis) => {
                primitives.push(Primitive::Reorient { axis, q: mv.turns() });
            }
        }
    }
    RobotScript { primitives }
}

/// Executes a script against a state. Enforces the grip discipline: rotate
/// only a gripped face, grip a face at most once at a time, release only
/// what is held, reorient only with every face released, and end with every
/// face released.
pub fn simulate(script: &RobotScript, state: &CubieState) -> Result<CubieState, RigError> {
    let mut gripped = [false; 6];
    let mut current = *state;
    let err = |index: usize, reason: String| RigError::ScriptError { index, reason };
    for (i, &p) in script.primitives.iter().enumerate() {
        match p {
            Primitive::Grip { face } => {
                if gripped[face.index()] {
                    return Err(err(i, format!("GRIP({face:?}) while already gripped")));
                }
                gripped[face.index()] = true;
            }
            Primitive::Rotate { face, q } => {
                if !(1..=3).contains(&q) {
                    return Err(err(i, format!("quarter turns {q} outside 1..=3")));
                }
                if !gripped[face.index()] {
                    return Err(err(i, format!("ROTATE({face:?}) without a grip")));
                }
                current = current.apply_move(Move::face(face, q));
            }
            Primitive::Release { face } => {
                if !gripped[face.index()] {
                    return Err(err(i, format!("RELEASE({face:?}) without a grip")));
                }
                gripped[face.index()] = false;
            }
            Primitive::Reorient { axis, q } => {
                if !(1..=3).contains(&q) {
                    return Err(err(i, format!("quarter turns {q} outside 1..=3")));
                }
                if gripped.iter().any(|&g| g) {
                    return Err(err(i, "REORIENT while a face is gripped".to_string()));
                }
                current = current.apply_move(Move::axis(axis, q));
            }
        }
    }
    if let Some(face) = (0..6).find(|&f| gripped[f]) {
        return Err(RigError::ScriptError {
            index: script.primitives.len(),
            reason: format!("script ends with {:?} still gripped", Face::from_index(face)),
        });
    }
    Ok(current)
}

mod face_letter {
    use cube_core::Face;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(face: &Face, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&face.letter().to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Face, D::Error> {
        let text = String::deserialize(d)?;
        let mut chars = text.chars();
        match (chars.next().and_then(Face::from_letter), chars.next()) {
            (Some(face), None) => Ok(face),
            _ => Err(de::Error::custom(format!("unknown face {text:?}"))),
        }
    }
}

mod axis_letter {
    use cube_core::Axis;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(axis: &Axis, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&axis.letter().to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Axis, D::Error> {
        let text = String::deserialize(d)?;
        let mut chars = text.chars();
        match (chars.next().and_then(Axis::from_letter), chars.next()) {
            (Some(axis), None) => Ok(axis),
            _ => Err(de::Error::custom(format!("unknown axis {text:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_turn_compiles_to_the_bracketed_triple() {
        let alg: Algorithm = "U".parse().unwrap();
        let script = compile_script(&alg);
        assert_eq!(
            script.primitives(),
            [
                Primitive::Grip { face: Face::U },
                Primitive::Rotate { face: Face::U, q: 1 },
                Primitive::Release { face: Face::U },
            ]
        );
    }

    #[test]
    fn empty_algorithm_compiles_to_an_empty_script() {
        let alg: Algorithm = "".parse().unwrap();
        assert!(compile_script(&alg).is_empty());
    }

    #[test]
    fn rotations_compile_to_reorientations() {
        let alg: Algorithm = "x2".parse().unwrap();
        let script = compile_script(&alg);
        assert_eq!(script.primitives(), [Primitive::Reorient { axis: Axis::X, q: 2 }]);
    }

    #[test]
    fn jsonl_lines_use_the_published_shape() {
        let alg: Algorithm = "U y'".parse().unwrap();
        let text = compile_script(&alg).to_jsonl();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines,
            [
                r#"{"op":"GRIP","face":"U"}"#,
                r#"{"op":"ROTATE","face":"U","q":1}"#,
                r#"{"op":"RELEASE","face":"U"}"#,
                r#"{"op":"REORIENT","axis":"y","q":3}"#,
            ]
        );
    }

    #[test]
    fn jsonl_round_trips() {
        let alg: Algorithm = "R U2 B' x D L' z2 F".parse().unwrap();
        let script = compile_script(&alg);
        assert_eq!(RobotScript::from_jsonl(&script.to_jsonl()).unwrap(), script);
    }

    #[test]
    fn bad_jsonl_reports_its_line() {
        let text = "{\"op\":\"GRIP\",\"face\":\"U\"}\n{\"op\":\"SPIN\"}\n";
        match RobotScript::from_jsonl(text) {
            Err(RigError::MalformedScript { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected MalformedScript, got {other:?}"),
        }
    }
}
