//! The distance-table cache location honors `CUBE_SOLVER_TABLE_PATH`.
//!
//! This file holds exactly one test so the variable is set before anything in
//! the process touches the shared tables.

use cube_core::CubieState;
use cube_solver::PruningTables;

#[test]
fn table_path_override_writes_the_cache_there() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("override-tables.bin");
    std::env::set_var("CUBE_SOLVER_TABLE_PATH", &path);

    let tables = PruningTables::shared();
    assert_eq!(tables.lower_bound(&CubieState::identity()), 0);
    assert!(path.is_file(), "cache written to the override path");
    assert!(path.metadata().unwrap().len() > 1_000_000);
}
