//! Fixed-algorithm steps for the last two stages.
//!
//! Orientation and permutation of the last layer are finished by trying a
//! small vocabulary of named algorithms under all four top-face alignments
//! and committing the first combination that reaches the step goal. The
//! tests below enumerate every reachable case, so the `unreachable!` arms
//! really are unreachable.

use std::sync::LazyLock;

use cube_core::{parse_algorithm, MoveTarget};

use crate::coords::RawState;
use crate::tables::{tables, Tables};

/// Every step template the planner can name: twelve piece insertions used by
/// the first three stages, then the sixteen finishing algorithms.
pub const TEMPLATE_NAMES: [&str; 28] = [
    "cross_edge_dr",
    "cross_edge_df",
    "cross_edge_dl",
    "cross_edge_db",
    "first_layer_corner_dfr",
    "first_layer_corner_dlf",
    "first_layer_corner_dbl",
    "first_layer_corner_drb",
    "second_layer_edge_fr",
    "second_layer_edge_fl",
    "second_layer_edge_bl",
    "second_layer_edge_br",
    "orient_edges_line",
    "orient_edges_l",
    "orient_edges_dot",
    "orient_corners_sune",
    "orient_corners_antisune",
    "orient_corners_h",
    "orient_corners_pi",
    "orient_corners_t",
    "orient_corners_headlights",
    "orient_corners_bowtie",
    "permute_corners_adjacent",
    "permute_corners_diagonal",
    "permute_edges_cycle_a",
    "permute_edges_cycle_b",
    "permute_edges_opposite",
    "permute_edges_adjacent",
];

pub(super) struct Template {
    pub name: &'static str,
    pub moves: Vec<usize>,
    pub action: RawState,
}

impl Template {
    fn new(name: &'static str, text: &str, t: &Tables) -> Template {
        let alg = parse_algorithm(text).expect("template literals parse");
        let moves: Vec<usize> = alg
            .moves()
            .iter()
            .map(|mv| match mv.target() {
                MoveTarget::Face(face) => face.index() * 3 + (mv.turns() - 1) as usize,
                MoveTarget::Axis(_) => panic!("template literals use face turns only"),
            })
            .collect();
        let mut action = RawState::SOLVED;
        for &m in &moves {
            action = action.then(&t.actions[m]);
        }
        Template { name, moves, action }
    }
}

pub(super) struct Finish {
    pub orient_edges: Vec<Template>,
    pub orient_corners: Vec<Template>,
    pub permute_corners: Vec<Template>,
    pub permute_edges: Vec<Template>,
}

static FINISH: LazyLock<Finish> = LazyLock::new(|| {
    let t = tables();
    Finish {
        orient_edges: vec![
            Template::new("orient_edges_line", "F R U R' U' F'", t),
            Template::new("orient_edges_l", "F U R U' R' F'", t),
            Template::new("orient_edges_dot", "F R U R' U' F' U2 F U R U' R' F'", t),
        ],
        orient_corners: vec![
            Template::new("orient_corners_sune", "R U R' U R U2 R'", t),
            Template::new("orient_corners_antisune", "R U2 R' U' R U' R'", t),
            Template::new("orient_corners_h", "R U R' U R U' R' U R U2 R'", t),
            Template::new("orient_corners_pi", "R U2 R2 U' R2 U' R2 U2 R", t),
            Template::new("orient_corners_t", "R U R D R' U' R D' R2", t),
            Template::new("orient_corners_headlights", "R2 D R' U2 R D' R' U2 R'", t),
            Template::new("orient_corners_bowtie", "R U2 R D R' U2 R D' R2", t),
        ],
        permute_corners: vec![
            Template::new("permute_corners_adjacent", "R U R' U' R' F R2 U' R' U' R U R' F'", t),
            Template::new(
                "permute_corners_diagonal",
                "F R U' R' U' R U R' F' R U R' U' R' F R F'",
                t,
            ),
        ],
        permute_edges: vec![
            Template::new("permute_edges_cycle_a", "R U' R U R U R U' R' U' R2", t),
            Template::new("permute_edges_cycle_b", "R2 U R U R' U' R' U' R' U R'", t),
            Template::new("permute_edges_opposite", "R2 U2 R U2 R2 U2 R2 U2 R U2 R2", t),
            Template::new(
                "permute_edges_adjacent",
                "R2 U R2 U R' U2 R2 U2 R2 U2 R' U' R2 U' R2",
                t,
            ),
        ],
    }
});

pub(super) fn finish() -> &'static Finish {
    &FINISH
}

fn with_auf(s: &RawState, t: &Tables, auf: usize) -> RawState {
    if auf == 0 {
        *s
    } else {
        s.then(&t.actions[auf - 1])
    }
}

fn push_auf(moves: &mut Vec<usize>, auf: usize) {
    if auf > 0 {
        moves.push(auf - 1);
    }
}

/// Top-layer edges unflipped. With the first two layers done, only the top
/// four orientation entries can be nonzero.
fn top_edges_oriented(s: &RawState) -> bool {
    s.eo[..4].iter().all(|&e| e == 0)
}

fn top_oriented(s: &RawState) -> bool {
    top_edges_oriented(s) && s.co[..4].iter().all(|&c| c == 0)
}

/// Corners all home after some number of top-face turns.
fn corners_aligned(s: &RawState, t: &Tables) -> bool {
    (0..4).any(|auf| {
        let c = with_auf(s, t, auf);
        c.cp == RawState::SOLVED.cp && c.co == [0; 8]
    })
}

fn first_working(
    s: &RawState,
    t: &Tables,
    templates: &'static [Template],
    ok: impl Fn(&RawState) -> bool,
) -> (Vec<usize>, &'static str, RawState) {
    for tmpl in templates {
        for auf in 0..4 {
            let cand = with_auf(s, t, auf).then(&tmpl.action);
            if ok(&cand) {
                let mut moves = Vec::with_capacity(tmpl.moves.len() + 1);
                push_auf(&mut moves, auf);
                moves.extend_from_slice(&tmpl.moves);
                return (moves, tmpl.name, cand);
            }
        }
    }
    unreachable!("finishing templates must cover every case")
}

pub(super) fn orient_stage(raw: &RawState, t: &Tables) -> (Vec<usize>, Vec<&'static str>) {
    let f = finish();
    let mut moves = Vec::new();
    let mut labels = Vec::new();
    let mut s = *raw;
    if !top_edges_oriented(&s) {
        let (m, name, next) = first_working(&s, t, &f.orient_edges, top_edges_oriented);
        moves.extend(m);
        labels.push(name);
        s = next;
    }
    if !top_oriented(&s) {
        let (m, name, _) = first_working(&s, t, &f.orient_corners, top_oriented);
        moves.extend(m);
        labels.push(name);
    }
    (moves, labels)
}

pub(super) fn permute_stage(raw: &RawState, t: &Tables) -> (Vec<usize>, Vec<&'static str>) {
    let f = finish();
    let mut moves = Vec::new();
    let mut labels = Vec::new();
    let mut s = *raw;
    if !corners_aligned(&s, t) {
        let (m, name, next) = first_working(&s, t, &f.permute_corners, |c| corners_aligned(c, t));
        moves.extend(m);
        labels.push(name);
        s = next;
    }
    if s != RawState::SOLVED {
        let (m, label) = finish_edges(&s, t, f);
        moves.extend(m);
        labels.extend(label);
    }
    (moves, labels)
}

/// Solves the remaining top-layer permutation, including the final alignment
/// turn. An alignment-only fix carries no template label.
fn finish_edges(s: &RawState, t: &Tables, f: &'static Finish) -> (Vec<usize>, Vec<&'static str>) {
    for fin in 0..4 {
        if with_auf(s, t, fin) == RawState::SOLVED {
            let mut moves = Vec::new();
            push_auf(&mut moves, fin);
            return (moves, Vec::new());
        }
    }
    for tmpl in &f.permute_edges {
        for auf in 0..4 {
            let cand = with_auf(s, t, auf).then(&tmpl.action);
            for fin in 0..4 {
                if with_auf(&cand, t, fin) == RawState::SOLVED {
                    let mut moves = Vec::new();
                    push_auf(&mut moves, auf);
                    moves.extend_from_slice(&tmpl.moves);
                    push_auf(&mut moves, fin);
                    return (moves, vec![tmpl.name]);
                }
            }
        }
    }
    unreachable!("edge permutation templates must cover every case")
}
