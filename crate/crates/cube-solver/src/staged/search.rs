//! Exact searches for the first three stages.
//!
//! Each stage solves its tracked pieces jointly with iterative-deepening
//! depth-first search. The bound is the largest of the relevant pattern-table
//! distances; each table holds the exact cost of homing its four pieces while
//! ignoring everything else, so the bound never overestimates and the first
//! solution found is stage-optimal.

use crate::coords::{placement, RawState};
use crate::tables::Tables;

/// No realizable stage needs anywhere near this many moves; exceeding it
/// means the tables are corrupt.
const DEPTH_CAP: u8 = 24;

const CROSS_LABELS: [&str; 4] =
    ["cross_edge_dr", "cross_edge_df", "cross_edge_dl", "cross_edge_db"];
const CORNER_LABELS: [&str; 4] = [
    "first_layer_corner_dfr",
    "first_layer_corner_dlf",
    "first_layer_corner_dbl",
    "first_layer_corner_drb",
];
const EQUATOR_LABELS: [&str; 4] = [
    "second_layer_edge_fr",
    "second_layer_edge_fl",
    "second_layer_edge_bl",
    "second_layer_edge_br",
];

/// Stage bound plus the quotient configuration the stage problem lives in.
/// Two states with the same configuration admit exactly the same solutions,
/// because moves act on tracked pieces independently of everything else.
struct Estimate {
    bound: u8,
    cfgs: [u32; 3],
}

fn estimate_cross(s: &RawState, t: &Tables) -> Estimate {
    let p = placement(s);
    let cross = p.edge_quad([4, 5, 6, 7]);
    Estimate { bound: t.stages.cross[cross], cfgs: [cross as u32, 0, 0] }
}

fn estimate_corners(s: &RawState, t: &Tables) -> Estimate {
    let p = placement(s);
    let cross = p.edge_quad([4, 5, 6, 7]);
    let corners = p.corner_quad();
    let mut bound = t.stages.cross[cross].max(t.stages.bottom_corners[corners]);
    for spec in 0..2 {
        bound = bound.max(t.stages.mixed[spec][p.mixed(spec)]);
    }
    Estimate { bound, cfgs: [cross as u32, corners as u32, 0] }
}

fn estimate_equator(s: &RawState, t: &Tables) -> Estimate {
    let p = placement(s);
    let cross = p.edge_quad([4, 5, 6, 7]);
    let corners = p.corner_quad();
    let equator = p.edge_quad([8, 9, 10, 11]);
    let mut bound = t.stages.cross[cross]
        .max(t.stages.bottom_corners[corners])
        .max(t.stages.equator[equator]);
    for spec in 0..t.stages.mixed.len() {
        bound = bound.max(t.stages.mixed[spec][p.mixed(spec)]);
    }
    Estimate { bound, cfgs: [cross as u32, corners as u32, equator as u32] }
}

pub(super) fn cross_stage(raw: &RawState, t: &Tables) -> (Vec<usize>, Vec<&'static str>) {
    let moves = shortest(raw, t, estimate_cross);
    let labels = settle_order(raw, t, &moves, &CROSS_LABELS, |s, i| {
        s.ep[4 + i] == 4 + i as u8 && s.eo[4 + i] == 0
    });
    (moves, labels)
}

pub(super) fn bottom_corner_stage(raw: &RawState, t: &Tables) -> (Vec<usize>, Vec<&'static str>) {
    let moves = shortest(raw, t, estimate_corners);
    let labels = settle_order(raw, t, &moves, &CORNER_LABELS, |s, i| {
        s.cp[4 + i] == 4 + i as u8 && s.co[4 + i] == 0
    });
    (moves, labels)
}

pub(super) fn equator_stage(raw: &RawState, t: &Tables) -> (Vec<usize>, Vec<&'static str>) {
    let moves = shortest(raw, t, estimate_equator);
    let labels = settle_order(raw, t, &moves, &EQUATOR_LABELS, |s, i| {
        s.ep[8 + i] == 8 + i as u8 && s.eo[8 + i] == 0
    });
    (moves, labels)
}

// Root sentinel for "no previous move". Must be out of reach of the child
// filter: faces run 0..6 and `face + 3` runs 3..9, so 9 matches neither.
const NO_FACE: usize = 9;

/// Configurations fit 18 bits each and the face restriction four (values
/// 0..6 plus [`NO_FACE`]), so a whole subproblem keys into one u64.
fn pack_key(cfgs: [u32; 3], last_face: usize) -> u64 {
    cfgs[0] as u64 | (cfgs[1] as u64) << 18 | (cfgs[2] as u64) << 36 | (last_face as u64) << 54
}

/// Multiply-xor hasher for the packed keys; the default hasher's overhead
/// dominates these searches.
#[derive(Default)]
struct KeyHasher(u64);

impl std::hash::Hasher for KeyHasher {
    fn write(&mut self, _bytes: &[u8]) {
        unreachable!("only u64 keys are hashed");
    }

    fn write_u64(&mut self, v: u64) {
        let mut h = v.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        h ^= h >> 32;
        self.0 = h;
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

type FailedMap = std::collections::HashMap<u64, u8, std::hash::BuildHasherDefault<KeyHasher>>;

struct Search<'a, F: Fn(&RawState, &Tables) -> Estimate> {
    t: &'a Tables,
    estimate: F,
    /// Failed subproblems mapped to the largest remaining depth that already
    /// failed from there.
    failed: FailedMap,
    stack: Vec<usize>,
}

/// Shortest move sequence driving the stage bound to zero. The bound is zero
/// exactly when the stage goal holds: it is the maximum of exact distances
/// for piece sets the goal includes, so iterative deepening from the initial
/// bound returns a stage-optimal sequence.
fn shortest(
    raw: &RawState,
    t: &Tables,
    estimate: impl Fn(&RawState, &Tables) -> Estimate,
) -> Vec<usize> {
    let e0 = estimate(raw, t);
    if e0.bound == 0 {
        return Vec::new();
    }
    let mut search = Search { t, estimate, failed: FailedMap::default(), stack: Vec::new() };
    for limit in e0.bound..=DEPTH_CAP {
        if search.dfs(raw, &e0, limit, NO_FACE) {
            return search.stack;
        }
    }
    unreachable!("stage search exceeded its depth cap");
}

impl<F: Fn(&RawState, &Tables) -> Estimate> Search<'_, F> {
    fn dfs(&mut self, s: &RawState, e: &Estimate, left: u8, last_face: usize) -> bool {
        if e.bound == 0 {
            return true;
        }
        debug_assert!(e.bound <= left);
        if left == 1 {
            // A single move must finish the stage; no memoization this deep.
            for face in 0..6 {
                if face == last_face || face + 3 == last_face {
                    continue;
                }
                for turns in 1..=3usize {
                    let m = face * 3 + turns - 1;
                    let next = s.then(&self.t.actions[m]);
                    if (self.estimate)(&next, self.t).bound == 0 {
                        self.stack.push(m);
                        return true;
                    }
                }
            }
            return false;
        }
        let key = pack_key(e.cfgs, last_face);
        if let Some(&depth) = self.failed.get(&key) {
            if depth >= left {
                return false;
            }
        }
        if left <= 3 {
            // Shallow subtrees are cheaper to scan than to order.
            for face in 0..6 {
                if face == last_face || face + 3 == last_face {
                    continue;
                }
                for turns in 1..=3usize {
                    let m = face * 3 + turns - 1;
                    let next = s.then(&self.t.actions[m]);
                    let ek = (self.estimate)(&next, self.t);
                    if ek.bound >= left {
                        continue;
                    }
                    self.stack.push(m);
                    if self.dfs(&next, &ek, left - 1, face) {
                        return true;
                    }
                    self.stack.pop();
                }
            }
        } else {
            // Children within the bound, cheapest first. The array is sized
            // for all six faces times three turns: only the root, with no
            // previous face to exclude, can actually fill it.
            let mut kids: [(u8, u8, RawState, [u32; 3]); 18] =
                [(0, 0, RawState::SOLVED, [0; 3]); 18];
            let mut n = 0;
            for face in 0..6 {
                if face == last_face || face + 3 == last_face {
                    continue;
                }
                for turns in 1..=3usize {
                    let m = face * 3 + turns - 1;
                    let next = s.then(&self.t.actions[m]);
                    let ek = (self.estimate)(&next, self.t);
                    if ek.bound >= left {
                        continue;
                    }
                    if ek.bound == 0 {
                        self.stack.push(m);
                        return true;
                    }
                    kids[n] = (ek.bound, m as u8, next, ek.cfgs);
                    n += 1;
                }
            }
            kids[..n].sort_by_key(|k| k.0);
            for (bound, m, next, cfgs) in kids.iter().take(n) {
                self.stack.push(*m as usize);
                let ek = Estimate { bound: *bound, cfgs: *cfgs };
                if self.dfs(next, &ek, left - 1, *m as usize / 3) {
                    return true;
                }
                self.stack.pop();
            }
        }
        if self.failed.len() < 1 << 23 {
            self.failed.insert(key, left);
        }
        false
    }
}

/// Orders the stage's template labels by when each tracked piece settled:
/// the prefix length after which it is home and stays home. Pieces already
/// home on entry and never disturbed contribute no label.
fn settle_order(
    raw: &RawState,
    t: &Tables,
    moves: &[usize],
    labels: &[&'static str; 4],
    home: impl Fn(&RawState, usize) -> bool,
) -> Vec<&'static str> {
    let mut states = Vec::with_capacity(moves.len() + 1);
    states.push(*raw);
    for &m in moves {
        let next = states.last().unwrap().then(&t.actions[m]);
        states.push(next);
    }
    let mut settle = [0usize; 4];
    for (i, slot) in settle.iter_mut().enumerate() {
        for (k, s) in states.iter().enumerate() {
            if !home(s, i) {
                *slot = k + 1;
            }
        }
    }
    let mut order: Vec<usize> = (0..4).filter(|&i| settle[i] > 0).collect();
    order.sort_by_key(|&i| (settle[i], i));
    order.into_iter().map(|i| labels[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::tables;

    #[test]
    #[ignore = "development timing probe"]
    fn dev_stage_timing() {
        let t = tables();
        for seed in 0..8u64 {
            let alg = crate::scramble(seed, 25);
            let state = cube_core::CubieState::identity().apply_algorithm(&alg);
            let mut raw = RawState::of(&state);
            let stages: [(&str, fn(&RawState, &Tables) -> (Vec<usize>, Vec<&'static str>)); 3] = [
                ("cross", cross_stage),
                ("corners", bottom_corner_stage),
                ("equator", equator_stage),
            ];
            let mut line = format!("seed {seed}:");
            for (name, stage) in stages {
                let t0 = std::time::Instant::now();
                let (moves, _) = stage(&raw, t);
                line += &format!(" {name} len {} in {:?}", moves.len(), t0.elapsed());
                for &m in &moves {
                    raw = raw.then(&t.actions[m]);
                }
            }
            println!("{line}");
        }
    }
}
