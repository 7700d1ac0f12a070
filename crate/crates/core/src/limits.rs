//! Desk-scale capacity bounds.
//!
//! Every exhaustive search in the crate checks its input against one of
//! these bounds and reports [`RaagError::Capacity`] instead of running for
//! an unbounded amount of time. A process-wide override (set by the CLI
//! from `RAAG_MAX_VERTICES`) replaces every vertex bound at once.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{RaagError, Result};

static OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Vertex bounds for the exhaustive algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Backtracking isomorphism and canonical forms.
    pub isomorphism: usize,
    /// Labeled graph enumeration (2^(n(n-1)/2) graphs).
    pub enumeration: usize,
    /// Exhaustive connectivity by cut enumeration.
    pub connectivity: usize,
    /// Host graphs for minor and Kuratowski-subdivision search.
    pub minor_host: usize,
    /// Pattern graphs for minor search.
    pub minor_pattern: usize,
    /// Searches over ear decompositions (nested, odd, min capacity, 3-connectivity).
    pub ear_search: usize,
    /// Subdivision and smoothing searches.
    pub subdivision: usize,
    /// Brute-force join and matching oracles.
    pub oracle: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            isomorphism: 12,
            enumeration: 6,
            connectivity: 24,
            minor_host: 12,
            minor_pattern: 6,
            ear_search: 10,
            subdivision: 12,
            oracle: 10,
        }
    }
}

impl Limits {
    /// The default bounds, or the override replicated into every field.
    pub fn current() -> Limits {
        match OVERRIDE.load(Ordering::Relaxed) {
            0 => Limits::default(),
            n => Limits {
                isomorphism: n,
                enumeration: n,
                connectivity: n,
                minor_host: n,
                minor_pattern: n,
                ear_search: n,
                subdivision: n,
                oracle: n,
            },
        }
    }
}

/// Replace every vertex bound with `n` (`None` restores the defaults).
pub fn set_override(n: Option<usize>) {
    OVERRIDE.store(n.unwrap_or(0), Ordering::Relaxed);
}

pub(crate) fn ensure(what: &str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(RaagError::capacity(what, actual, limit))
    } else {
        Ok(())
    }
}
