//! Hamming metrics and the radius bounds that follow from them.

use alloc::vec::Vec;

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::strings::StringSet;
use crate::symbols::SymbolSet;

/// Number of positions at which `a` and `b` differ.
pub fn hamming_distance(a: &[Symbol], b: &[Symbol]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            row: 1,
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(mismatches(a, b))
}

#[inline]
pub(crate) fn mismatches(a: &[Symbol], b: &[Symbol]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Largest pairwise distance within the set; 0 for a single string.
pub fn hamming_diameter(set: &StringSet) -> usize {
    let mut best = 0;
    for i in 0..set.count() {
        for j in i + 1..set.count() {
            best = best.max(mismatches(set.row(i), set.row(j)));
        }
    }
    best
}

/// `ceil(HD / 2)`: no string is closer than this to every member of the set.
pub fn distance_lower_bound(set: &StringSet) -> usize {
    hamming_diameter(set).div_ceil(2)
}

/// Largest distance from `candidate` to any member of the set.
pub fn max_distance(candidate: &[Symbol], set: &StringSet) -> usize {
    set.rows()
        .map(|r| mismatches(candidate, r))
        .max()
        .unwrap_or(0)
}

/// For each position, the symbols that occur there in some input string.
/// A closest string never needs a symbol outside these sets.
pub fn position_domains(set: &StringSet) -> Vec<SymbolSet> {
    (0..set.len())
        .map(|j| set.rows().map(|r| r[j]).collect())
        .collect()
}

/// Closed interval of candidate radii, `low <= high <= L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundInterval {
    low: usize,
    high: usize,
}

impl BoundInterval {
    pub fn new(low: usize, high: usize, len: usize) -> Result<Self> {
        if low > high || high > len {
            return Err(Error::InvalidBounds { low, high, len });
        }
        Ok(BoundInterval { low, high })
    }

    /// `[ceil(HD/2), HD]`.
    pub fn for_instance(set: &StringSet) -> Self {
        let hd = hamming_diameter(set);
        BoundInterval {
            low: hd.div_ceil(2),
            high: hd,
        }
    }

    pub fn low(self) -> usize {
        self.low
    }

    pub fn high(self) -> usize {
        self.high
    }

    pub fn is_closed(self) -> bool {
        self.low == self.high
    }

    /// Intersection with another interval. Returns `None` when they do not overlap.
    pub fn tighten(self, other: BoundInterval) -> Option<Self> {
        let low = self.low.max(other.low);
        let high = self.high.min(other.high);
        (low <= high).then_some(BoundInterval { low, high })
    }
}
