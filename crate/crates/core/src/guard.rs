//! Resource guards on enumeration sizes.
//!
//! Each enumeration checks its size parameter against a per-kind default.
//! A process-wide override (set by the CLI from `MCQ_MAX_N`) replaces every
//! default at once.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

static OVERRIDE: AtomicUsize = AtomicUsize::new(0);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Guard {
    Permutations,
    Decorated,
    /// The Q / Q0 / Q-tilde families and uniform Frobenius series.
    QFamily,
    GeneratingFunction,
    /// Combined degree of a shuffle product.
    ShuffleDegree,
    QUniform,
    /// Number of flats of an ingested matroid.
    Flats,
}

impl Guard {
    pub fn default_max(self) -> usize {
        match self {
            Guard::Permutations => 12,
            Guard::Decorated => 10,
            Guard::QFamily => 8,
            Guard::GeneratingFunction => 6,
            Guard::ShuffleDegree => 14,
            Guard::QUniform => 16,
            Guard::Flats => 5000,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Guard::Permutations => "permutation enumeration",
            Guard::Decorated => "decorated permutation enumeration",
            Guard::QFamily => "Eulerian quasisymmetric family",
            Guard::GeneratingFunction => "generating-function expansion",
            Guard::ShuffleDegree => "shuffle product degree",
            Guard::QUniform => "q-uniform Hilbert series",
            Guard::Flats => "flat enumeration",
        }
    }

    pub fn max(self) -> usize {
        match OVERRIDE.load(Ordering::Relaxed) {
            0 => self.default_max(),
            // the flat guard counts flats, not ground-set size
            v if self == Guard::Flats => self.default_max().max(v),
            v => v,
        }
    }

    pub fn check(self, n: usize) -> Result<()> {
        let max = self.max();
        if n > max {
            Err(Error::Guard {
                what: self.label(),
                n,
                max,
            })
        } else {
            Ok(())
        }
    }
}

/// Replace all guard defaults with `max_n` (or restore defaults with `None`).
pub fn set_override(max_n: Option<usize>) {
    OVERRIDE.store(max_n.unwrap_or(0), Ordering::Relaxed);
}
