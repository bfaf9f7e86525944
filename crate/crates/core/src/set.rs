//! Bitmask subsets of a small finite carrier (at most 32 points).

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Subset of `{0, .., 31}` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet(pub u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n >= 32 {
            PointSet(u32::MAX)
        } else {
            PointSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter()
            .fold(PointSet::EMPTY, |acc, i| acc | PointSet::singleton(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn complement_in(self, n: usize) -> PointSet {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    /// The unique element if this is a singleton.
    pub fn single(self) -> Option<usize> {
        (self.len() == 1).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `{0, .., n-1}` in increasing bitmask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        debug_assert!(n < 32);
        (0..(1u32 << n)).map(PointSet)
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 | rhs.0)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & rhs.0)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iter_and_len_agree() {
        let s = PointSet::from_indices([0, 3, 7]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 7]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.single(), None);
        assert_eq!(PointSet::singleton(5).single(), Some(5));
    }

    #[test]
    fn complement_stays_in_carrier() {
        let s = PointSet::from_indices([1]);
        assert_eq!(s.complement_in(3), PointSet::from_indices([0, 2]));
        assert_eq!(PointSet::full(32).len(), 32);
    }
}
