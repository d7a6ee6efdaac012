//! Fixed-width bit vectors over a carrier.
//!
//! Every subset of a carrier is stored as a run of `u64` words sized to the
//! carrier. Carriers up to 256 elements stay inline.

use alloc::vec::Vec;
use core::fmt;

use smallvec::{smallvec, SmallVec};

type Words = SmallVec<[u64; 4]>;

/// A subset of `0..width` for some carrier width.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    words: Words,
}

#[inline]
fn word_count(width: usize) -> usize {
    width.div_ceil(64)
}

impl Subset {
    pub fn empty(width: usize) -> Self {
        Self { words: smallvec![0; word_count(width)] }
    }

    pub fn singleton(width: usize, element: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(element);
        s
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for i in 0..width {
            s.insert(i);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(width: usize, items: I) -> Self {
        let mut s = Self::empty(width);
        for i in items {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, element: usize) {
        self.words[element / 64] |= 1u64 << (element % 64);
    }

    #[inline]
    pub fn remove(&mut self, element: usize) {
        self.words[element / 64] &= !(1u64 << (element % 64));
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        self.words
            .get(element / 64)
            .is_some_and(|w| w & (1u64 << (element % 64)) != 0)
    }

    #[inline]
    pub fn union_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    #[inline]
    pub fn intersects(&self, other: &Subset) -> bool {
        self.words.iter().zip(other.words.iter()).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The only element, if the subset has exactly one.
    #[inline]
    pub fn single(&self) -> Option<usize> {
        let mut found = None;
        for (i, w) in self.words.iter().enumerate() {
            if *w == 0 {
                continue;
            }
            if found.is_some() || w.count_ones() != 1 {
                return None;
            }
            found = Some(i * 64 + w.trailing_zeros() as usize);
        }
        found
    }

    /// Whether this subset was built for `width` and has no element beyond it.
    pub fn fits(&self, width: usize) -> bool {
        self.words.len() == word_count(width) && self.iter().all(|x| x < width)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
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
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
