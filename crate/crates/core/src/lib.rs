//! Higher-order MDS codes: exact finite-field and linear-code algebra,
//! list-decodability testers, explicit 2-MDS GRS constructions and bound
//! calculators.

pub mod bounds;
pub mod codes;
pub mod comb;
pub mod construct;
pub mod cosets;
pub mod error;
pub mod fields;
pub mod hmds;
pub mod json;
pub mod matgf;
pub mod repro;

pub use error::{Error, Result};

use std::sync::atomic::{AtomicU64, Ordering};

/// Default cap on enumerated vectors (or codewords) per operation.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

static BUDGET: AtomicU64 = AtomicU64::new(0);

/// Current enumeration budget: an explicit setting, else `HMDS_BUDGET`, else the default.
pub fn budget() -> u64 {
    match BUDGET.load(Ordering::Relaxed) {
        0 => std::env::var("HMDS_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|&v| v >= 1.0)
            .map(|v| v as u64)
            .unwrap_or(DEFAULT_BUDGET),
        b => b,
    }
}

pub fn set_budget(b: u64) {
    BUDGET.store(b, Ordering::Relaxed);
}
