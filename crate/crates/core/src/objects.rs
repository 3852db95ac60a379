//! Subsets of a finite universe, stored as bitsets over universe positions.

use fixedbitset::FixedBitSet;

/// A subset of the universe `{0, .., len}` addressed by object position.
///
/// Iteration is always in ascending position order, which is the canonical
/// universe order used by every display and serialization layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObjectSet(FixedBitSet);

impl ObjectSet {
    pub fn empty(len: usize) -> Self {
        ObjectSet(FixedBitSet::with_capacity(len))
    }

    pub fn full(len: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(len);
        bits.insert_range(..);
        ObjectSet(bits)
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(len);
        for idx in indices {
            set.insert(idx);
        }
        set
    }

    /// Size of the universe this set lives in.
    pub fn universe_len(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, idx: usize) {
        self.0.insert(idx);
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.0.contains(idx)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe_len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe_len(), other.universe_len());
        let mut out = self.0.clone();
        out.union_with(&other.0);
        ObjectSet(out)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe_len(), other.universe_len());
        let mut out = self.0.clone();
        out.intersect_with(&other.0);
        ObjectSet(out)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.is_disjoint(&other.0)
    }
}
