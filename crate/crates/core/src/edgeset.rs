use std::fmt;

/// Maximum number of edges a [`crate::Graph`] may carry; edge sets are single machine words.
pub const MAX_EDGES: usize = 64;

/// A set of edge indices of one graph, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    /// All edges `0..len`.
    pub fn full(len: usize) -> EdgeSet {
        debug_assert!(len <= MAX_EDGES);
        if len == 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << len) - 1)
        }
    }

    pub fn single(e: usize) -> EdgeSet {
        EdgeSet(1u64 << e)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    pub fn with(self, e: usize) -> EdgeSet {
        EdgeSet(self.0 | 1u64 << e)
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: EdgeSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest edge index in the set.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Edge indices in increasing order.
    pub fn iter(self) -> EdgeIter {
        EdgeIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares two sets as sorted index lists.
    pub fn lex_cmp(self, other: EdgeSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for EdgeSet {
    type Item = usize;
    type IntoIter = EdgeIter;

    fn into_iter(self) -> EdgeIter {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct EdgeIter(u64);

impl Iterator for EdgeIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for EdgeIter {}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: EdgeSet = [0, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(4));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(EdgeSet::full(64).len(), 64);
        assert_eq!(EdgeSet::full(0), EdgeSet::EMPTY);
    }

    #[test]
    fn lexicographic_order_of_index_lists() {
        let a: EdgeSet = [0, 5].into_iter().collect();
        let b: EdgeSet = [1, 2].into_iter().collect();
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
        let c: EdgeSet = [0].into_iter().collect();
        assert_eq!(c.lex_cmp(a), std::cmp::Ordering::Less);
    }
}
