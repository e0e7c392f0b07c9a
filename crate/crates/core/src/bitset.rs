//! Fixed-universe bit sets over element indices.

use core::cmp::Ordering;
use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

const WORD: usize = 64;

/// A set of element indices drawn from `0..universe`.
///
/// Ordering is lexicographic on the sorted member lists, so for two sets of
/// equal size the smaller one is the one whose least differing member is
/// smaller.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// Returns `true` if `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        let w = &mut self.words[i / WORD];
        let bit = 1u64 << (i % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        Self {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        Self {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD + bit);
            }
            self.word_idx += 1;
            self.current = *self.words.get(self.word_idx)?;
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
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
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let mut s = ElementSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), [0, 64, 129]);
        assert!(s.contains(129));
        assert!(!s.contains(128));
        assert!(!s.contains(500));
        let t = ElementSet::from_indices(130, [0, 1, 64]);
        assert_eq!(s.intersection(&t).to_vec(), [0, 64]);
        assert_eq!(s.union(&t).to_vec(), [0, 1, 64, 129]);
        assert!(ElementSet::from_indices(130, [0, 64]).is_subset(&s));
        assert!(!t.is_subset(&s));
    }

    #[test]
    fn lexicographic_order() {
        let a = ElementSet::from_indices(10, [0, 2]);
        let b = ElementSet::from_indices(10, [0, 3]);
        let c = ElementSet::from_indices(10, [1, 2]);
        assert!(a < b && b < c);
    }

    proptest! {
        #[test]
        fn matches_sorted_vec(mut xs in proptest::collection::vec(0usize..200, 0..50)) {
            let s = ElementSet::from_indices(200, xs.iter().copied());
            xs.sort_unstable();
            xs.dedup();
            prop_assert_eq!(s.len(), xs.len());
            prop_assert_eq!(s.to_vec(), xs);
        }

        #[test]
        fn order_is_member_lexicographic(
            xs in proptest::collection::btree_set(0usize..100, 0..10),
            ys in proptest::collection::btree_set(0usize..100, 0..10),
        ) {
            let a = ElementSet::from_indices(100, xs.iter().copied());
            let b = ElementSet::from_indices(100, ys.iter().copied());
            let xv: Vec<usize> = xs.into_iter().collect();
            let yv: Vec<usize> = ys.into_iter().collect();
            prop_assert_eq!(a.cmp(&b), xv.cmp(&yv));
        }
    }
}
