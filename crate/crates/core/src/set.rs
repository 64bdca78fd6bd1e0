use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

const WORD: usize = 64;

/// A subset of the vertices `0..universe` of some graph, stored as a bitset.
///
/// Sets over the same universe combine with `|`, `&` and `-`. Graphs with at
/// most 128 vertices never touch the heap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: SmallVec::from_elem(0, universe.div_ceil(WORD)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (i, word) in set.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(universe);
            *word = if hi - lo == WORD {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        set
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(v);
        set
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut set = Self::empty(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Builds a set from the low `universe` bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD, "mask construction needs universe <= 64");
        let mut set = Self::empty(universe);
        if universe > 0 {
            let keep = if universe == WORD {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            set.words[0] = mask & keep;
        }
        set
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / WORD] &= !(1 << (v % WORD));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn complement(&self) -> VertexSet {
        &VertexSet::full(self.universe) - self
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    #[inline]
    fn check_universe(&self, other: &VertexSet) {
        debug_assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = std::vec::IntoIter<usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.to_vec().into_iter()
    }
}

// Sets order by their ascending member sequences, so {0,3} < {1} < {1,2}.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

macro_rules! set_op {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident, $op:expr) => {
        impl $trait<&VertexSet> for &VertexSet {
            type Output = VertexSet;

            fn $method(self, rhs: &VertexSet) -> VertexSet {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }

        impl $trait<&VertexSet> for VertexSet {
            type Output = VertexSet;

            fn $method(mut self, rhs: &VertexSet) -> VertexSet {
                self.$assign(rhs);
                self
            }
        }

        impl $assign_trait<&VertexSet> for VertexSet {
            #[inline]
            fn $assign(&mut self, rhs: &VertexSet) {
                self.check_universe(rhs);
                for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
                    *a = $op(*a, *b);
                }
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |a: u64, b: u64| a | b);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, |a: u64, b: u64| a & b);
set_op!(Sub, sub, SubAssign, sub_assign, |a: u64, b: u64| a & !b);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra() {
        let a = VertexSet::from_vertices(10, [1, 3, 5]);
        let b = VertexSet::from_vertices(10, [3, 4]);
        assert_eq!((&a | &b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!((&a & &b).to_vec(), vec![3]);
        assert_eq!((&a - &b).to_vec(), vec![1, 5]);
        assert!(VertexSet::from_vertices(10, [1, 5]).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert_eq!(a.len(), 3);
        assert_eq!(a.first(), Some(1));
        assert_eq!(a.last(), Some(5));
    }

    #[test]
    fn spans_multiple_words() {
        let mut s = VertexSet::empty(200);
        for v in [0, 63, 64, 127, 128, 199] {
            s.insert(v);
        }
        assert_eq!(s.to_vec(), vec![0, 63, 64, 127, 128, 199]);
        assert_eq!(s.complement().len(), 194);
        assert_eq!(VertexSet::full(200).len(), 200);
        assert_eq!(s.last(), Some(199));
        s.remove(64);
        assert!(!s.contains(64));
    }

    #[test]
    fn empty_universe() {
        let s = VertexSet::full(0);
        assert!(s.is_empty());
        assert_eq!(s.first(), None);
        assert_eq!(s.iter().count(), 0);
    }

    #[test]
    fn ordering_is_lexicographic_on_members() {
        let a = VertexSet::from_vertices(4, [0, 3]);
        let b = VertexSet::from_vertices(4, [1]);
        let c = VertexSet::from_vertices(4, [1, 2]);
        assert!(a < b && b < c);
    }

    #[test]
    fn from_mask_truncates() {
        let s = VertexSet::from_mask(3, 0b1111);
        assert_eq!(s.to_vec(), vec![0, 1, 2]);
    }
}
