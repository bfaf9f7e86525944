//! Carrier spaces: explicit finite topologies and pixel grids.
//!
//! Both backends implement [`Space`], which is all the proximity and
//! connectedness machinery needs: Boolean set algebra, interior, closure and
//! a connectedness test. Points are addressed by `usize` index (a point of a
//! [`FiniteSpace`], or `y * width + x` on a [`Grid`]).

mod finite;
mod grid;
mod shape;

pub(crate) use finite::{connected_by_min_neighborhoods, min_neighborhoods};
pub use finite::{enumerate_topologies, FiniteSpace, MAX_ENUMERATED_POINTS, MAX_POINTS};
pub use grid::{Adjacency, Grid, GridRegion};
pub use shape::{rasterize, Shape};

use std::fmt::Debug;
use std::hash::Hash;

pub trait Space {
    type Set: Clone + PartialEq + Eq + Hash + Debug;

    fn full(&self) -> Self::Set;
    fn empty(&self) -> Self::Set;
    fn singleton(&self, p: usize) -> Self::Set;
    fn contains(&self, s: &Self::Set, p: usize) -> bool;
    fn points(&self, s: &Self::Set) -> Vec<usize>;
    fn count(&self, s: &Self::Set) -> usize;

    fn union(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;
    fn intersection(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;
    /// Complement relative to the carrier.
    fn complement(&self, s: &Self::Set) -> Self::Set;

    fn interior(&self, s: &Self::Set) -> Self::Set;

    /// Dual of [`Space::interior`].
    fn closure(&self, s: &Self::Set) -> Self::Set {
        self.complement(&self.interior(&self.complement(s)))
    }

    fn is_connected(&self, s: &Self::Set) -> bool;

    /// Whether `s` counts as an open set of the carrier.
    fn is_open(&self, s: &Self::Set) -> bool;

    /// Human-readable rendering used in report witnesses.
    fn describe(&self, s: &Self::Set) -> String;

    fn is_empty(&self, s: &Self::Set) -> bool {
        self.count(s) == 0
    }

    fn is_subset(&self, a: &Self::Set, b: &Self::Set) -> bool {
        self.intersection(a, b) == *a
    }

    fn intersects(&self, a: &Self::Set, b: &Self::Set) -> bool {
        !self.is_empty(&self.intersection(a, b))
    }

    /// The single point of `s`, if it has exactly one.
    fn single_point(&self, s: &Self::Set) -> Option<usize> {
        if self.count(s) == 1 {
            self.points(s).first().copied()
        } else {
            None
        }
    }

    /// A nonempty set equal to the interior of its closure.
    fn is_regular_open(&self, s: &Self::Set) -> bool {
        !self.is_empty(s) && self.interior(&self.closure(s)) == *s
    }

    fn union_all<'a, I>(&self, sets: I) -> Self::Set
    where
        I: IntoIterator<Item = &'a Self::Set>,
        Self::Set: 'a,
    {
        sets.into_iter().fold(self.empty(), |acc, s| self.union(&acc, s))
    }
}
