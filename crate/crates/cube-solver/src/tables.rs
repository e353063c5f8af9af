//! Transition and distance tables shared by every search.
//!
//! Everything is built single-threaded on first use, kept immutable behind a
//! process-wide handle, and therefore safe to share across threads. Distance
//! tables are cached on disk with a versioned header and rebuilt whenever the
//! cache is absent, truncated, or from another version.

use std::env;
use std::fs;
use std::path::PathBuf;
use std::sync::LazyLock;

use cube_core::CubieState;

use crate::coords::{
    bottom_corner_config, bottom_edge_config, corner_perm_index, corner_perm_rep, equator_edge_config,
    face_turn_actions, flip_index, flip_rep, outer_edge_perm_index, outer_edge_perm_rep, placement,
    slice_perm_index, slice_perm_rep, slice_set_index, slice_set_rep, twist_index, twist_rep,
    RawState, CORNER_PERM_COUNT, FLIP_COUNT, MIXED_SPECS, MOVE_COUNT, OUTER_EDGE_PERM_COUNT,
    SECOND_PHASE_MOVES, SLICE_PERM_COUNT, SLICE_SET_COUNT, SLICE_SET_HOME, TWIST_COUNT,
};

/// Entry for "no distance recorded"; never returned for reachable queries.
const UNSEEN: u8 = u8::MAX;

/// Coordinate transition tables: `table[coord * stride + m]` is the coordinate
/// after applying move `m` (an index into the table's own move list).
pub(crate) struct Transitions {
    pub twist: Vec<u16>,
    pub flip: Vec<u16>,
    pub slice_set: Vec<u16>,
    pub corner_perm: Vec<u16>,
    /// Second-phase moves only.
    pub outer_edge: Vec<u16>,
    /// Second-phase moves only.
    pub slice_perm: Vec<u8>,
}

/// Exact distances over paired coordinates, used to prune the two searches of
/// the fast solver. Each value is the length of a shortest move sequence
/// taking the pair to its goal while ignoring everything else, so it never
/// overestimates the true remaining length.
pub(crate) struct Distances {
    /// `[twist * 495 + slice_set]`, over all 18 moves.
    pub twist_slice: Vec<u8>,
    /// `[flip * 495 + slice_set]`, over all 18 moves.
    pub flip_slice: Vec<u8>,
    /// `[corner_perm * 24 + slice_perm]`, over the 10 second-phase moves.
    pub corner_slice: Vec<u8>,
    /// `[outer_edge_perm * 24 + slice_perm]`, over the 10 second-phase moves.
    pub outer_slice: Vec<u8>,
}

/// Pattern tables for the layer-by-layer stages: exact distance to bring the
/// tracked four pieces home while ignoring all others, an admissible bound
/// for any goal that includes those pieces.
pub(crate) struct StageTables {
    /// Four bottom-layer edges, indexed by [`bottom_edge_config`].
    pub cross: Vec<u8>,
    /// Four bottom-layer corners, indexed by [`bottom_corner_config`].
    pub bottom_corners: Vec<u8>,
    /// Four equator edges, indexed by [`equator_edge_config`].
    pub equator: Vec<u8>,
    /// Two edges plus two corners each, one table per entry of
    /// [`MIXED_SPECS`], indexed by [`Placement::mixed`]. These sharpen the
    /// stage bounds where piece insertions interact.
    pub mixed: Vec<Vec<u8>>,
}

/// Lower-bound tables over single coordinates, one per tracked quantity.
/// Each entry is the exact number of face turns needed to bring that quantity
/// alone to its solved value, which can never exceed the length of a full
/// solution from the same state.
pub struct PruningTables {
    twist: Vec<u8>,
    flip: Vec<u8>,
    corner_perm: Vec<u8>,
}

impl PruningTables {
    /// The process-wide tables, built or loaded from cache on first use.
    pub fn shared() -> &'static PruningTables {
        &tables().pruning
    }

    /// Moves needed to clear all corner twists, ignoring everything else.
    pub fn corner_orientation_bound(&self, state: &CubieState) -> u8 {
        self.twist[twist_index(&RawState::of(state))]
    }

    /// Moves needed to clear all edge flips, ignoring everything else.
    pub fn edge_orientation_bound(&self, state: &CubieState) -> u8 {
        self.flip[flip_index(&RawState::of(state))]
    }

    /// Moves needed to put every corner in its home slot, ignoring everything
    /// else.
    pub fn corner_permutation_bound(&self, state: &CubieState) -> u8 {
        self.corner_perm[corner_perm_index(&RawState::of(state))]
    }

    /// The best of the three single-quantity bounds.
    pub fn lower_bound(&self, state: &CubieState) -> u8 {
        self.corner_orientation_bound(state)
            .max(self.edge_orientation_bound(state))
            .max(self.corner_permutation_bound(state))
    }

    pub fn corner_orientation_distances(&self) -> &[u8] {
        &self.twist
    }

    pub fn edge_orientation_distances(&self) -> &[u8] {
        &self.flip
    }

    pub fn corner_permutation_distances(&self) -> &[u8] {
        &self.corner_perm
    }

    pub(crate) fn twist_at(&self, idx: usize) -> u8 {
        self.twist[idx]
    }

    pub(crate) fn flip_at(&self, idx: usize) -> u8 {
        self.flip[idx]
    }

    pub(crate) fn corner_perm_at(&self, idx: usize) -> u8 {
        self.corner_perm[idx]
    }
}

pub(crate) struct Tables {
    pub actions: [RawState; 18],
    pub moves: Transitions,
    pub dist: Distances,
    pub pruning: PruningTables,
    pub stages: StageTables,
}

static TABLES: LazyLock<Tables> = LazyLock::new(build_or_load);

pub(crate) fn tables() -> &'static Tables {
    &TABLES
}

fn build_transition(
    count: usize,
    actions: &[RawState; 18],
    move_list: &[usize],
    rep: impl Fn(usize) -> RawState,
    encode: impl Fn(&RawState) -> usize,
) -> Vec<u16> {
    let stride = move_list.len();
    let mut table = vec![0u16; count * stride];
    for idx in 0..count {
        let base = rep(idx);
        for (mi, &m) in move_list.iter().enumerate() {
            table[idx * stride + mi] = encode(&base.then(&actions[m])) as u16;
        }
    }
    table
}

/// Breadth-first distances over the product of two coordinates. The move set
/// is closed under inverses, so distance from the goal equals distance to it.
fn bfs_pair(
    count_a: usize,
    count_b: usize,
    table_a: &[u16],
    table_b: &[u16],
    stride: usize,
    start: usize,
) -> Vec<u8> {
    let mut dist = vec![UNSEEN; count_a * count_b];
    dist[start] = 0;
    let mut frontier = vec![start as u32];
    let mut depth = 0u8;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            let a = idx as usize / count_b;
            let b = idx as usize % count_b;
            for m in 0..stride {
                let na = table_a[a * stride + m] as usize;
                let nb = table_b[b * stride + m] as usize;
                let ni = na * count_b + nb;
                if dist[ni] == UNSEEN {
                    dist[ni] = depth + 1;
                    next.push(ni as u32);
                }
            }
        }
        depth += 1;
        frontier = next;
    }
    dist
}

fn bfs_single(count: usize, table: &[u16], stride: usize, start: usize) -> Vec<u8> {
    let mut dist = vec![UNSEEN; count];
    dist[start] = 0;
    let mut frontier = vec![start as u32];
    let mut depth = 0u8;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            for m in 0..stride {
                let ni = table[idx as usize * stride + m] as usize;
                if dist[ni] == UNSEEN {
                    dist[ni] = depth + 1;
                    next.push(ni as u32);
                }
            }
        }
        depth += 1;
        frontier = next;
    }
    dist
}

/// Per-move slot maps for one piece kind: where the piece in each slot lands
/// and the orientation it gains on the way.
struct SlotAction {
    dst: [[u8; 12]; 18],
    gain: [[u8; 12]; 18],
}

fn edge_slot_actions(actions: &[RawState; 18]) -> SlotAction {
    let mut out = SlotAction { dst: [[0; 12]; 18], gain: [[0; 12]; 18] };
    for (m, action) in actions.iter().enumerate() {
        for j in 0..12 {
            let from = action.ep[j] as usize;
            out.dst[m][from] = j as u8;
            out.gain[m][from] = action.eo[j];
        }
    }
    out
}

fn corner_slot_actions(actions: &[RawState; 18]) -> SlotAction {
    let mut out = SlotAction { dst: [[0; 12]; 18], gain: [[0; 12]; 18] };
    for (m, action) in actions.iter().enumerate() {
        for j in 0..8 {
            let from = action.cp[j] as usize;
            out.dst[m][from] = j as u8;
            out.gain[m][from] = action.co[j];
        }
    }
    out
}

/// BFS over the 24^4 configurations of four tracked pieces. Each digit has
/// its own piece kind: slot maps and an orientation base (2 for edges, 3 for
/// corners). Unreachable configurations keep [`UNSEEN`].
fn bfs_stage(slots: [&SlotAction; 4], bases: [usize; 4], goal: usize) -> Vec<u8> {
    let size = 24usize.pow(4);
    let mut dist = vec![UNSEEN; size];
    dist[goal] = 0;
    let mut frontier = vec![goal as u32];
    let mut depth = 0u8;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            let mut cfg = [0usize; 4];
            let mut rem = idx as usize;
            for c in cfg.iter_mut() {
                *c = rem % 24;
                rem /= 24;
            }
            for m in 0..MOVE_COUNT {
                let mut ni = 0usize;
                for i in (0..4).rev() {
                    let slot = cfg[i] / bases[i];
                    let ori = cfg[i] % bases[i];
                    let nslot = slots[i].dst[m][slot] as usize;
                    let nori = (ori + slots[i].gain[m][slot] as usize) % bases[i];
                    ni = ni * 24 + (nslot * bases[i] + nori);
                }
                if dist[ni] == UNSEEN {
                    dist[ni] = depth + 1;
                    next.push(ni as u32);
                }
            }
        }
        depth += 1;
        frontier = next;
    }
    dist
}

fn build() -> Tables {
    let actions = face_turn_actions();
    let all: Vec<usize> = (0..MOVE_COUNT).collect();
    let second: Vec<usize> = SECOND_PHASE_MOVES.to_vec();

    let twist = build_transition(TWIST_COUNT, &actions, &all, twist_rep, twist_index);
    let flip = build_transition(FLIP_COUNT, &actions, &all, flip_rep, flip_index);
    let slice_set =
        build_transition(SLICE_SET_COUNT, &actions, &all, slice_set_rep, slice_set_index);
    let corner_perm = build_transition(
        CORNER_PERM_COUNT,
        &actions,
        &all,
        corner_perm_rep,
        corner_perm_index,
    );
    let outer_edge = build_transition(
        OUTER_EDGE_PERM_COUNT,
        &actions,
        &second,
        outer_edge_perm_rep,
        outer_edge_perm_index,
    );
    let slice_perm_16 = build_transition(
        SLICE_PERM_COUNT,
        &actions,
        &second,
        slice_perm_rep,
        slice_perm_index,
    );
    let slice_perm: Vec<u8> = slice_perm_16.iter().map(|&v| v as u8).collect();

    // The search propagates corner permutations through the full-alphabet
    // table, but the paired distance walk below strides over the restricted
    // move list, so it needs a table with matching stride.
    let corner_perm_second = build_transition(
        CORNER_PERM_COUNT,
        &actions,
        &second,
        corner_perm_rep,
        corner_perm_index,
    );

    let moves = Transitions { twist, flip, slice_set, corner_perm, outer_edge, slice_perm };

    let dist = Distances {
        twist_slice: bfs_pair(
            TWIST_COUNT,
            SLICE_SET_COUNT,
            &moves.twist,
            &moves.slice_set,
            MOVE_COUNT,
            SLICE_SET_HOME,
        ),
        flip_slice: bfs_pair(
            FLIP_COUNT,
            SLICE_SET_COUNT,
            &moves.flip,
            &moves.slice_set,
            MOVE_COUNT,
            SLICE_SET_HOME,
        ),
        corner_slice: bfs_pair(
            CORNER_PERM_COUNT,
            SLICE_PERM_COUNT,
            &corner_perm_second,
            &slice_perm_16,
            SECOND_PHASE_MOVES.len(),
            0,
        ),
        outer_slice: bfs_pair(
            OUTER_EDGE_PERM_COUNT,
            SLICE_PERM_COUNT,
            &moves.outer_edge,
            &slice_perm_16,
            SECOND_PHASE_MOVES.len(),
            0,
        ),
    };

    let pruning = PruningTables {
        twist: bfs_single(TWIST_COUNT, &moves.twist, MOVE_COUNT, 0),
        flip: bfs_single(FLIP_COUNT, &moves.flip, MOVE_COUNT, 0),
        corner_perm: bfs_single(CORNER_PERM_COUNT, &moves.corner_perm, MOVE_COUNT, 0),
    };

    let edge_slots = edge_slot_actions(&actions);
    let corner_slots = corner_slot_actions(&actions);
    let home = placement(&RawState::SOLVED);
    let mixed = (0..MIXED_SPECS.len())
        .map(|i| {
            bfs_stage(
                [&edge_slots, &edge_slots, &corner_slots, &corner_slots],
                [2, 2, 3, 3],
                home.mixed(i),
            )
        })
        .collect();
    let stages = StageTables {
        cross: bfs_stage(
            [&edge_slots; 4],
            [2; 4],
            bottom_edge_config(&RawState::SOLVED),
        ),
        bottom_corners: bfs_stage(
            [&corner_slots; 4],
            [3; 4],
            bottom_corner_config(&RawState::SOLVED),
        ),
        equator: bfs_stage(
            [&edge_slots; 4],
            [2; 4],
            equator_edge_config(&RawState::SOLVED),
        ),
        mixed,
    };

    Tables { actions, moves, dist, pruning, stages }
}

// Disk cache for the distance tables. Transition tables rebuild in
// milliseconds and are not cached.

const CACHE_MAGIC: &[u8; 8] = b"CUBETAB\0";
const CACHE_VERSION: u32 = 3;

fn cache_sections(t: &Tables) -> Vec<(&'static str, &[u8], usize)> {
    let stage_size = 24usize.pow(4);
    let mut sections: Vec<(&'static str, &[u8], usize)> = vec![
        ("twist_slice", &t.dist.twist_slice, TWIST_COUNT * SLICE_SET_COUNT),
        ("flip_slice", &t.dist.flip_slice, FLIP_COUNT * SLICE_SET_COUNT),
        ("corner_slice", &t.dist.corner_slice, CORNER_PERM_COUNT * SLICE_PERM_COUNT),
        ("outer_slice", &t.dist.outer_slice, OUTER_EDGE_PERM_COUNT * SLICE_PERM_COUNT),
        ("twist", &t.pruning.twist, TWIST_COUNT),
        ("flip", &t.pruning.flip, FLIP_COUNT),
        ("corner_perm", &t.pruning.corner_perm, CORNER_PERM_COUNT),
        ("cross", &t.stages.cross, stage_size),
        ("bottom_corners", &t.stages.bottom_corners, stage_size),
        ("equator", &t.stages.equator, stage_size),
    ];
    for table in &t.stages.mixed {
        sections.push(("mixed", table, stage_size));
    }
    sections
}

fn expected_section_lengths() -> Vec<usize> {
    let stage_size = 24usize.pow(4);
    let mut expected = vec![
        TWIST_COUNT * SLICE_SET_COUNT,
        FLIP_COUNT * SLICE_SET_COUNT,
        CORNER_PERM_COUNT * SLICE_PERM_COUNT,
        OUTER_EDGE_PERM_COUNT * SLICE_PERM_COUNT,
        TWIST_COUNT,
        FLIP_COUNT,
        CORNER_PERM_COUNT,
        stage_size,
        stage_size,
        stage_size,
    ];
    expected.extend(std::iter::repeat(stage_size).take(MIXED_SPECS.len()));
    expected
}

fn cache_path() -> PathBuf {
    match env::var_os("CUBE_SOLVER_TABLE_PATH") {
        Some(path) => PathBuf::from(path),
        None => env::temp_dir().join("cube-solver-distance-tables.bin"),
    }
}

fn fnv1a(data: &[u8], mut hash: u64) -> u64 {
    for &b in data {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100_0000_01b3);
    }
    hash
}

fn save_cache(t: &Tables, path: &PathBuf) {
    let sections = cache_sections(t);
    let total: usize = sections.iter().map(|&(_, s, _)| s.len()).sum::<usize>();
    let mut out = Vec::with_capacity(16 + total);
    out.extend_from_slice(CACHE_MAGIC);
    out.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for (_, section, _) in sections {
        out.extend_from_slice(&(section.len() as u64).to_le_bytes());
        out.extend_from_slice(section);
        hash = fnv1a(section, hash);
    }
    out.extend_from_slice(&hash.to_le_bytes());
    // Best effort: a failed cache write only costs the next process a rebuild.
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    if fs::write(&tmp, &out).is_ok() && fs::rename(&tmp, path).is_err() {
        let _ = fs::remove_file(&tmp);
    }
}

/// Rebuilds everything cheap, then replaces the distance tables with cached
/// bytes when the header, lengths, and checksum all line up.
fn load_cache(path: &PathBuf) -> Option<Vec<Vec<u8>>> {
    let data = fs::read(path).ok()?;
    let mut at = 0usize;
    let take = |at: &mut usize, n: usize| -> Option<&[u8]> {
        let slice = data.get(*at..*at + n)?;
        *at += n;
        Some(slice)
    };
    if take(&mut at, 8)? != CACHE_MAGIC {
        return None;
    }
    let version = u32::from_le_bytes(take(&mut at, 4)?.try_into().unwrap());
    if version != CACHE_VERSION {
        return None;
    }
    let expected = expected_section_lengths();
    let mut sections = Vec::with_capacity(expected.len());
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for want in expected {
        let len = u64::from_le_bytes(take(&mut at, 8)?.try_into().unwrap()) as usize;
        if len != want {
            return None;
        }
        let bytes = take(&mut at, len)?;
        hash = fnv1a(bytes, hash);
        sections.push(bytes.to_vec());
    }
    let stored = u64::from_le_bytes(take(&mut at, 8)?.try_into().unwrap());
    if stored != hash || at != data.len() {
        return None;
    }
    Some(sections)
}

fn build_or_load() -> Tables {
    let path = cache_path();
    if let Some(mut sections) = load_cache(&path) {
        // Transition tables and piece actions are always rebuilt; only the
        // breadth-first distance passes are worth caching.
        let actions = face_turn_actions();
        let all: Vec<usize> = (0..MOVE_COUNT).collect();
        let second: Vec<usize> = SECOND_PHASE_MOVES.to_vec();
        let twist = build_transition(TWIST_COUNT, &actions, &all, twist_rep, twist_index);
        let flip = build_transition(FLIP_COUNT, &actions, &all, flip_rep, flip_index);
        let slice_set =
            build_transition(SLICE_SET_COUNT, &actions, &all, slice_set_rep, slice_set_index);
        let corner_perm = build_transition(
            CORNER_PERM_COUNT,
            &actions,
            &all,
            corner_perm_rep,
            corner_perm_index,
        );
        let outer_edge = build_transition(
            OUTER_EDGE_PERM_COUNT,
            &actions,
            &second,
            outer_edge_perm_rep,
            outer_edge_perm_index,
        );
        let slice_perm = build_transition(
            SLICE_PERM_COUNT,
            &actions,
            &second,
            slice_perm_rep,
            slice_perm_index,
        )
        .iter()
        .map(|&v| v as u8)
        .collect();

        let mixed = sections.split_off(sections.len() - MIXED_SPECS.len());
        let equator = sections.pop().unwrap();
        let bottom_corners = sections.pop().unwrap();
        let cross = sections.pop().unwrap();
        let corner_perm_dist = sections.pop().unwrap();
        let flip_dist = sections.pop().unwrap();
        let twist_dist = sections.pop().unwrap();
        let outer_slice = sections.pop().unwrap();
        let corner_slice = sections.pop().unwrap();
        let flip_slice = sections.pop().unwrap();
        let twist_slice = sections.pop().unwrap();

        return Tables {
            actions,
            moves: Transitions { twist, flip, slice_set, corner_perm, outer_edge, slice_perm },
            dist: Distances { twist_slice, flip_slice, corner_slice, outer_slice },
            pruning: PruningTables {
                twist: twist_dist,
                flip: flip_dist,
                corner_perm: corner_perm_dist,
            },
            stages: StageTables { cross, bottom_corners, equator, mixed },
        };
    }
    let tables = build();
    save_cache(&tables, &path);
    tables
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solved_entries_are_zero() {
        let t = tables();
        assert_eq!(t.pruning.twist[0], 0);
        assert_eq!(t.pruning.flip[0], 0);
        assert_eq!(t.pruning.corner_perm[0], 0);
        assert_eq!(t.dist.twist_slice[SLICE_SET_HOME], 0);
        assert_eq!(t.dist.corner_slice[0], 0);
        assert_eq!(t.stages.cross[bottom_edge_config(&RawState::SOLVED)], 0);
    }

    #[test]
    fn every_phase_pair_is_reachable() {
        let t = tables();
        assert!(t.dist.twist_slice.iter().all(|&d| d != UNSEEN));
        assert!(t.dist.flip_slice.iter().all(|&d| d != UNSEEN));
        assert!(t.dist.corner_slice.iter().all(|&d| d != UNSEEN));
        assert!(t.dist.outer_slice.iter().all(|&d| d != UNSEEN));
        assert!(t.pruning.twist.iter().all(|&d| d != UNSEEN));
        assert!(t.pruning.flip.iter().all(|&d| d != UNSEEN));
        assert!(t.pruning.corner_perm.iter().all(|&d| d != UNSEEN));
    }

    #[test]
    fn known_extremes() {
        let t = tables();
        // Clearing corner twist alone never needs more than 6 moves, edge
        // flips 9, and the corner permutation tops out at 13 or less.
        assert!(t.pruning.twist.iter().all(|&d| d <= 6));
        assert!(t.pruning.flip.iter().all(|&d| d <= 9));
        assert!(t.pruning.corner_perm.iter().all(|&d| d <= 14));
    }

    #[test]
    fn cache_round_trips_every_section() {
        let t = tables();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tables.bin");
        save_cache(t, &path);
        let loaded = load_cache(&path).expect("fresh cache loads");
        let sections = cache_sections(t);
        assert_eq!(loaded.len(), sections.len());
        for (bytes, (name, original, len)) in loaded.iter().zip(sections) {
            assert_eq!(bytes.len(), len, "section {name}");
            assert_eq!(bytes.as_slice(), original, "section {name}");
        }
    }

    #[test]
    fn corrupt_or_stale_caches_are_rejected() {
        let t = tables();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tables.bin");
        save_cache(t, &path);
        let good = fs::read(&path).unwrap();

        // One flipped payload byte breaks the checksum.
        let mut bad = good.clone();
        let mid = bad.len() / 2;
        bad[mid] ^= 0x5A;
        fs::write(&path, &bad).unwrap();
        assert!(load_cache(&path).is_none());

        // Truncation is caught by the length framing.
        fs::write(&path, &good[..good.len() - 9]).unwrap();
        assert!(load_cache(&path).is_none());

        // A different format version forces a rebuild.
        let mut stale = good.clone();
        stale[8..12].copy_from_slice(&(CACHE_VERSION + 1).to_le_bytes());
        fs::write(&path, &stale).unwrap();
        assert!(load_cache(&path).is_none());

        // The pristine bytes still load.
        fs::write(&path, &good).unwrap();
        assert!(load_cache(&path).is_some());
    }
}
