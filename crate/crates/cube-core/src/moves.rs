use std::fmt;

/// Face labels, also used as sticker colors. Centers never move relative to
/// each other, so the home face of a sticker doubles as its color name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Face {
    U = 0,
    R = 1,
    F = 2,
    D = 3,
    L = 4,
    B = 5,
}

pub const FACES: [Face; 6] = [Face::U, Face::R, Face::F, Face::D, Face::L, Face::B];

impl Face {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Face {
        FACES[i]
    }

    pub fn letter(self) -> char {
        b"URFDLB"[self.index()] as char
    }

    pub fn from_letter(c: char) -> Option<Face> {
        Some(match c {
            'U' => Face::U,
            'R' => Face::R,
            'F' => Face::F,
            'D' => Face::D,
            'L' => Face::L,
            'B' => Face::B,
            _ => return None,
        })
    }

    /// The face on the opposite side of the cube. Turns of opposite faces
    /// commute.
    pub fn opposite(self) -> Face {
        match self {
            Face::U => Face::D,
            Face::D => Face::U,
            Face::R => Face::L,
            Face::L => Face::R,
            Face::F => Face::B,
            Face::B => Face::F,
        }
    }

    /// Axis shared by a face and its opposite: 0 for U/D, 1 for R/L, 2 for F/B.
    pub fn axis_index(self) -> usize {
        match self {
            Face::U | Face::D => 0,
            Face::R | Face::L => 1,
            Face::F | Face::B => 2,
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Whole-cube rotation axes: `x` follows R, `y` follows U, `z` follows F.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Axis {
    X = 0,
    Y = 1,
    Z = 2,
}

pub const AXES: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

impl Axis {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        b"xyz"[self.index()] as char
    }

    pub fn from_letter(c: char) -> Option<Axis> {
        Some(match c {
            'x' => Axis::X,
            'y' => Axis::Y,
            'z' => Axis::Z,
            _ => return None,
        })
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// What a move acts on: one face layer, or the whole cube about an axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveTarget {
    Face(Face),
    Axis(Axis),
}

/// One token of the move alphabet: a target and a quarter-turn count in
/// `1..=3` (1 = clockwise, 2 = half turn, 3 = counterclockwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    target: MoveTarget,
    turns: u8,
}

impl Move {
    pub fn face(face: Face, turns: u8) -> Move {
        assert!((1..=3).contains(&turns), "turns must be 1..=3");
        Move { target: MoveTarget::Face(face), turns }
    }

    pub fn axis(axis: Axis, turns: u8) -> Move {
        assert!((1..=3).contains(&turns), "turns must be 1..=3");
        Move { target: MoveTarget::Axis(axis), turns }
    }

    pub fn target(self) -> MoveTarget {
        self.target
    }

    pub fn turns(self) -> u8 {
        self.turns
    }

    pub fn is_rotation(self) -> bool {
        matches!(self.target, MoveTarget::Axis(_))
    }

    /// The move undoing this one: same target, `4 - turns` quarter turns.
    pub fn inverse(self) -> Move {
        Move { target: self.target, turns: 4 - self.turns }
    }

    /// All 18 face moves in a fixed enumeration order (face-major, then turn
    /// count). Search code relies on this order being stable.
    pub fn all_face_moves() -> impl Iterator<Item = Move> {
        FACES
            .iter()
            .flat_map(|&f| (1..=3).map(move |t| Move::face(f, t)))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.target {
            MoveTarget::Face(face) => write!(f, "{}", face.letter())?,
            MoveTarget::Axis(axis) => write!(f, "{}", axis.letter())?,
        }
        match self.turns {
            1 => Ok(()),
            2 => write!(f, "2"),
            3 => write!(f, "'"),
            _ => unreachable!(),
        }
    }
}
