//! Fixed-capacity vertex bitsets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use smallvec::SmallVec;

const WORD_BITS: usize = 64;

/// Graphs up to 256 vertices keep their sets inline.
type Words = SmallVec<[u64; 4]>;

/// A subset of `{0, …, capacity - 1}` stored as a bitset.
///
/// All binary operations require both operands to share the same capacity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Words,
    capacity: usize,
}

fn word_count(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS)
}

impl VertexSet {
    /// The empty set over `{0, …, capacity - 1}`.
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: smallvec::smallvec![0; word_count(capacity)],
            capacity,
        }
    }

    /// The full set `{0, …, capacity - 1}`.
    pub fn full(capacity: usize) -> Self {
        let mut set = VertexSet {
            words: smallvec::smallvec![!0; word_count(capacity)],
            capacity,
        };
        set.trim();
        set
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        let mut set = Self::new(capacity);
        set.insert(v);
        set
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(capacity: usize, items: I) -> Self {
        let mut set = Self::new(capacity);
        for v in items {
            set.insert(v);
        }
        set
    }

    /// Builds a set from the low `capacity` bits of `mask`. Requires `capacity <= 64`.
    pub fn from_mask(capacity: usize, mask: u64) -> Self {
        assert!(capacity <= WORD_BITS, "mask sets hold at most 64 vertices");
        let mut set = Self::new(capacity);
        if capacity > 0 {
            set.words[0] = mask;
            set.trim();
        }
        set
    }

    /// The characteristic bitmask of a set whose capacity is at most 64.
    pub fn to_mask(&self) -> u64 {
        assert!(self.capacity <= WORD_BITS, "mask sets hold at most 64 vertices");
        self.words.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        let rem = self.capacity % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Inserts `v`, returning whether it was absent.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} out of range for capacity {}", self.capacity);
        let word = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        let absent = *word & bit == 0;
        *word |= bit;
        absent
    }

    /// Removes `v`, returning whether it was present.
    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.capacity {
            return false;
        }
        let word = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        let present = *word & bit != 0;
        *word &= !bit;
        present
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    fn check_capacity(&self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity, "vertex set capacity mismatch");
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet {
            words: self.words.iter().map(|w| !w).collect(),
            capacity: self.capacity,
        };
        out.trim();
        out
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_capacity(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_capacity(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_capacity(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Orders sets by size, then lexicographically by their ascending member lists.
    pub fn cmp_size_lex(&self, other: &VertexSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl BitOr for &VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: &VertexSet) -> VertexSet {
        self.union(rhs)
    }
}

impl BitAnd for &VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: &VertexSet) -> VertexSet {
        self.intersection(rhs)
    }
}

impl Sub for &VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: &VertexSet) -> VertexSet {
        self.difference(rhs)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
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
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
