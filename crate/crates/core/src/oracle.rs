//! Independent brute-force validators backing the test suites.
//!
//! Nothing in here calls the construction code it is meant to check:
//! Cartan matrices are byte-parsed from hand-entered fixture tables and
//! the boundary pairing matrix is recomputed directly from those tables.
//! The duplication is deliberate.

use std::env;
use std::fs;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::rootsys::Series;

/// Directory holding the fixture tables. `WONDERLAT_FIXTURES` overrides
/// the compiled-in default (the workspace `fixtures/` directory).
pub fn fixture_dir() -> PathBuf {
    if let Ok(dir) = env::var("WONDERLAT_FIXTURES") {
        return PathBuf::from(dir);
    }
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

/// Loads the hand-transcribed Cartan table for a simple type.
///
/// Pure parsing, no computation: the file is the authority.
pub fn cartan_fixture(series: Series, rank: usize) -> Result<Vec<Vec<i64>>> {
    let path = fixture_dir().join(format!("{}{}.txt", series.letter(), rank));
    let text = fs::read_to_string(&path).map_err(|_| Error::FixtureMissing {
        path: path.display().to_string(),
    })?;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: std::result::Result<Vec<i64>, _> =
            line.split_whitespace().map(str::parse).collect();
        let row =
            row.map_err(|e| Error::Parse(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
        rows.push(row);
    }
    if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
        return Err(Error::Parse(format!(
            "{}: expected a {rank}x{rank} table",
            path.display()
        )));
    }
    Ok(rows)
}

/// Dynkin adjacency derived from the fixture table (off-diagonal nonzero).
pub fn adjacency_fixture(series: Series, rank: usize) -> Result<Vec<Vec<bool>>> {
    let cartan = cartan_fixture(series, rank)?;
    Ok((0..rank)
        .map(|i| (0..rank).map(|j| i != j && cartan[i][j] != 0).collect())
        .collect())
}

/// All simple types with rank at most `max_rank`, in a fixed order.
pub fn simple_types_up_to(max_rank: usize) -> Vec<(Series, usize)> {
    let mut types = Vec::new();
    for (series, min) in [
        (Series::A, 1),
        (Series::B, 2),
        (Series::C, 2),
        (Series::D, 3),
    ] {
        for rank in min..=max_rank {
            types.push((series, rank));
        }
    }
    for rank in 6..=8 {
        if rank <= max_rank {
            types.push((Series::E, rank));
        }
    }
    if max_rank >= 4 {
        types.push((Series::F, 4));
    }
    if max_rank >= 2 {
        types.push((Series::G, 2));
    }
    types
}

/// Boundary pairing matrix of the group compactification of a simple `G`,
/// computed straight from the fixture table: the entry `(i, j)` is the
/// pairing of the boundary divisor for the i-th spherical root with the
/// curve class dual to the j-th color, which equals `αⱼ∨(αᵢ)`.
pub fn boundary_matrix_oracle(series: Series, rank: usize) -> Result<Vec<Vec<i64>>> {
    let cartan = cartan_fixture(series, rank)?;
    Ok((0..rank)
        .map(|i| (0..rank).map(|j| cartan[j][i]).collect())
        .collect())
}

/// The worked intersection table for the compactification of `PGL₄`
/// (type A₃): η = (1,1,1), η₁ = (0,1,0), η₂ = (1,0,1) paired against the
/// three boundary divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pgl4Golden {
    pub eta: [i64; 3],
    pub eta1: [i64; 3],
    pub eta2: [i64; 3],
    pub boundary_vs_eta: [i64; 3],
    pub boundary_vs_eta1: [i64; 3],
    pub boundary_vs_eta2: [i64; 3],
}

pub fn pgl4_golden() -> Pgl4Golden {
    Pgl4Golden {
        eta: [1, 1, 1],
        eta1: [0, 1, 0],
        eta2: [1, 0, 1],
        boundary_vs_eta: [1, 0, 1],
        boundary_vs_eta1: [-1, 2, -1],
        boundary_vs_eta2: [2, -2, 2],
    }
}
