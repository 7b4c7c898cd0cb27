//! Shared sources for the integration tests, cached under the target tmpdir.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use divzeta::{CriticalLineGrid, DivisorTable, HybridErrorTerms};

pub const N_MAX: usize = 10_000_000;
pub const T_MAX: f64 = 1e4;
pub const TOL: f64 = 1e-10;

fn cache_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("divzeta-test-cache")
}

pub fn table() -> &'static DivisorTable {
    static T: OnceLock<DivisorTable> = OnceLock::new();
    T.get_or_init(|| DivisorTable::load_or_build(&cache_dir().join(format!("divisors-{N_MAX}.bin")), N_MAX).unwrap())
}

pub fn grid() -> &'static CriticalLineGrid {
    static G: OnceLock<CriticalLineGrid> = OnceLock::new();
    G.get_or_init(|| {
        CriticalLineGrid::load_or_build(&cache_dir().join(format!("grid-{T_MAX}-{TOL:e}.bin")), T_MAX, TOL).unwrap()
    })
}

pub fn terms() -> HybridErrorTerms<'static> {
    HybridErrorTerms::new(grid(), table())
}
