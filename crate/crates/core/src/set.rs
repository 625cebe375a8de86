use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of one dimension, stored as a bit row over the dimension's
/// element indices.
///
/// Sets order canonically: as sorted index lists compared lexicographically,
/// so `{} < {0} < {0, 1} < {1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet(FixedBitSet);

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSet(bits)
    }

    /// Panics if an index is `>= universe`.
    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Number of elements in the dimension this set lives in.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.contains(index)
    }

    pub fn insert(&mut self, index: usize) {
        self.0.insert(index);
    }

    pub fn remove(&mut self, index: usize) {
        self.0.set(index, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.minimum()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn retain(&mut self, mut keep: impl FnMut(usize) -> bool) {
        let drop: Vec<usize> = self.iter().filter(|&i| !keep(i)).collect();
        for i in drop {
            self.remove(i);
        }
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then_with(|| self.universe().cmp(&other.universe()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_lexicographic_over_index_lists() {
        let u = 3;
        let mut sets = [
            ElementSet::from_indices(u, [1]),
            ElementSet::from_indices(u, [0, 1]),
            ElementSet::empty(u),
            ElementSet::from_indices(u, [0, 2]),
            ElementSet::from_indices(u, [0]),
            ElementSet::from_indices(u, [0, 1, 2]),
        ];
        sets.sort();
        let lists: Vec<Vec<usize>> = sets.iter().map(ElementSet::to_vec).collect();
        assert_eq!(
            lists,
            vec![
                vec![],
                vec![0],
                vec![0, 1],
                vec![0, 1, 2],
                vec![0, 2],
                vec![1]
            ]
        );
    }

    #[test]
    fn full_and_empty() {
        assert!(ElementSet::full(4).is_full());
        assert_eq!(ElementSet::full(4).len(), 4);
        assert!(ElementSet::empty(4).is_empty());
        assert!(ElementSet::full(0).is_empty() && ElementSet::full(0).is_full());
    }

    #[test]
    fn retain_drops_rejected() {
        let mut s = ElementSet::full(5);
        s.retain(|i| i % 2 == 0);
        assert_eq!(s.to_vec(), vec![0, 2, 4]);
    }
}
