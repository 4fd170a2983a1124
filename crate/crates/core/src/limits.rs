//! Size guards. Everything in this crate is exponential by design, so each
//! enumeration-backed operation carries an explicit vertex-count guard and
//! family-materialization cap instead of open-ended runtime.

use thiserror::Error;

/// Default cap on materialized set families (maximum independent sets,
/// maximum critical independent sets).
pub const DEFAULT_OMEGA_CAP: usize = 100_000;

/// Enumerating every independent set is guarded at this vertex count.
pub const ENUMERATE_ALL_MAX_N: usize = 20;

/// Critical-difference machinery scans all independent sets.
pub const CRITICAL_MAX_N: usize = 20;

/// Comparing the all-subsets difference maximum against the
/// independent-sets-only maximum costs 2^n.
pub const ALL_SUBSETS_MAX_N: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LimitError {
    #[error("{op} supports at most {max} vertices, got {n}")]
    TooLarge {
        op: &'static str,
        n: usize,
        max: usize,
    },
    #[error("{what} exceeds the cap of {cap} sets")]
    CapExceeded { what: &'static str, cap: usize },
}
