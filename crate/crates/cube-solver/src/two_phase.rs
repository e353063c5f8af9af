//! Fast bounded solving in two phases: reduce the cube to the subgroup
//! generated by the restricted move set, then finish inside that subgroup.
//!
//! The first solution found is returned, and the search order is fixed, so
//! results are deterministic for a given state and length bound. The
//! wall-clock budget only decides when to give up.

use std::time::{Duration, Instant};

use cube_core::{Algorithm, CubieState};

use crate::coords::{
    corner_perm_index, flip_index, outer_edge_perm_index, slice_perm_index, slice_set_index,
    twist_index, RawState, MOVE_COUNT, SECOND_PHASE_MOVES, SLICE_PERM_COUNT, SLICE_SET_COUNT,
};
use crate::error::SolverError;
use crate::observer_algorithm;
use crate::tables::{tables, Tables};

/// How many search nodes pass between deadline checks.
const CHECK_INTERVAL: u32 = 0xFFF;

/// Longest first-phase prefix worth trying: every state can reach the
/// subgroup within 12 moves.
const PHASE1_CAP: usize = 12;

/// Longest second-phase suffix: every subgroup state solves within 18 of the
/// restricted moves.
const PHASE2_CAP: usize = 18;

/// Finds a solution of at most `max_len` face turns, or gives up once the
/// time budget runs out. With `max_len >= 30` the searched decomposition
/// always contains a solution, so only the budget can fail.
pub fn solve_fast(
    state: &CubieState,
    max_len: usize,
    time_budget: Duration,
) -> Result<Algorithm, SolverError> {
    let raw = RawState::of(state);
    if raw == RawState::SOLVED {
        return Ok(Algorithm::new(Vec::new()));
    }
    let mut search = Search {
        t: tables(),
        raw,
        max_len,
        budget: time_budget,
        deadline: Instant::now() + time_budget,
        nodes: 0,
        phase1: Vec::new(),
        phase2: Vec::new(),
    };
    let (tw, fl, sl) = (twist_index(&raw), flip_index(&raw), slice_set_index(&raw));
    for d1 in 0..=PHASE1_CAP.min(max_len) {
        if let Some(moves) = search.phase1_dfs(tw, fl, sl, d1 as u8, NO_FACE)? {
            let alg = observer_algorithm(state.frame(), &moves);
            debug_assert!(state.apply_algorithm(&alg).is_solved());
            return Ok(alg);
        }
    }
    Err(SolverError::BudgetExceeded { max_len, budget: time_budget })
}

// Root sentinel for "no previous move". Must be out of reach of the child
// filter: faces run 0..6 and `face + 3` runs 3..9, so 9 matches neither.
const NO_FACE: usize = 9;

struct Search<'a> {
    t: &'a Tables,
    raw: RawState,
    max_len: usize,
    budget: Duration,
    deadline: Instant,
    nodes: u32,
    phase1: Vec<usize>,
    phase2: Vec<usize>,
}

impl Search<'_> {
    fn out_of_time(&mut self) -> bool {
        self.nodes = self.nodes.wrapping_add(1);
        self.nodes & CHECK_INTERVAL == 0 && Instant::now() >= self.deadline
    }

    fn give_up(&self) -> SolverError {
        SolverError::BudgetExceeded { max_len: self.max_len, budget: self.budget }
    }

    /// Explores prefixes of exactly `left` more moves that put orientation
    /// and the equator-edge set at their subgroup values.
    fn phase1_dfs(
        &mut self,
        twist: usize,
        flip: usize,
        slice: usize,
        left: u8,
        last_face: usize,
    ) -> Result<Option<Vec<usize>>, SolverError> {
        if self.out_of_time() {
            return Err(self.give_up());
        }
        let d = &self.t.dist;
        let bound = d.twist_slice[twist * SLICE_SET_COUNT + slice]
            .max(d.flip_slice[flip * SLICE_SET_COUNT + slice]);
        if bound > left {
            return Ok(None);
        }
        if left == 0 {
            // A prefix ending in a second-phase move duplicates a shorter
            // prefix already explored at a smaller first-phase depth.
            if let Some(&last) = self.phase1.last() {
                if SECOND_PHASE_MOVES.contains(&last) {
                    return Ok(None);
                }
            }
            return self.phase2_root();
        }
        for face in 0..6 {
            if face == last_face || face + 3 == last_face {
                continue;
            }
            for turns in 1..=3usize {
                let m = face * 3 + turns - 1;
                let nt = self.t.moves.twist[twist * MOVE_COUNT + m] as usize;
                let nf = self.t.moves.flip[flip * MOVE_COUNT + m] as usize;
                let ns = self.t.moves.slice_set[slice * MOVE_COUNT + m] as usize;
                self.phase1.push(m);
                let found = self.phase1_dfs(nt, nf, ns, left - 1, face)?;
                if found.is_some() {
                    return Ok(found);
                }
                self.phase1.pop();
            }
        }
        Ok(None)
    }

    /// Runs the second phase from the state reached by the current prefix.
    fn phase2_root(&mut self) -> Result<Option<Vec<usize>>, SolverError> {
        let mut s = self.raw;
        for &m in &self.phase1 {
            s = s.then(&self.t.actions[m]);
        }
        let cp = corner_perm_index(&s);
        let oe = outer_edge_perm_index(&s);
        let sp = slice_perm_index(&s);
        if cp == 0 && oe == 0 && sp == 0 {
            return Ok(Some(self.phase1.clone()));
        }
        let room = self.max_len - self.phase1.len();
        let last_face = self.phase1.last().map_or(NO_FACE, |&m| m / 3);
        for d2 in 1..=room.min(PHASE2_CAP) {
            self.phase2.clear();
            if self.phase2_dfs(cp, oe, sp, d2 as u8, last_face)? {
                let mut moves = self.phase1.clone();
                moves.extend_from_slice(&self.phase2);
                return Ok(Some(moves));
            }
        }
        Ok(None)
    }

    fn phase2_dfs(
        &mut self,
        cperm: usize,
        outer: usize,
        sperm: usize,
        left: u8,
        last_face: usize,
    ) -> Result<bool, SolverError> {
        if self.out_of_time() {
            return Err(self.give_up());
        }
        let d = &self.t.dist;
        let bound = d.corner_slice[cperm * SLICE_PERM_COUNT + sperm]
            .max(d.outer_slice[outer * SLICE_PERM_COUNT + sperm]);
        if bound > left {
            return Ok(false);
        }
        if left == 0 {
            // All three coordinates at zero pin the subgroup state exactly.
            return Ok(cperm == 0 && outer == 0 && sperm == 0);
        }
        let stride = SECOND_PHASE_MOVES.len();
        for (pos, &m) in SECOND_PHASE_MOVES.iter().enumerate() {
            let face = m / 3;
            if face == last_face || face + 3 == last_face {
                continue;
            }
            let nc = self.t.moves.corner_perm[cperm * MOVE_COUNT + m] as usize;
            let no = self.t.moves.outer_edge[outer * stride + pos] as usize;
            let np = self.t.moves.slice_perm[sperm * stride + pos] as usize;
            self.phase2.push(m);
            if self.phase2_dfs(nc, no, np, left - 1, face)? {
                return Ok(true);
            }
            self.phase2.pop();
        }
        Ok(false)
    }
}
