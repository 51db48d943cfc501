use serde::{Deserialize, Serialize};

use super::{words_for, WORD};

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            }
        })
    })
}

/// A subset of `0..m` with bitmask semantics.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet {
    m: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet {
    pub fn empty(m: usize) -> Self {
        VertexSet {
            m,
            words: vec![0; words_for(m)],
        }
    }

    pub fn full(m: usize) -> Self {
        let mut s = Self::empty(m);
        for v in 0..m {
            s.insert(v);
        }
        s
    }

    pub fn range(m: usize, r: std::ops::Range<usize>) -> Self {
        Self::from_iter(m, r)
    }

    /// Panics if a member is `>= m`.
    pub fn from_iter(m: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(m);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Builds a set from the low bits of `mask` (requires `m <= 64`).
    pub fn from_mask(m: usize, mask: u64) -> Self {
        debug_assert!(m <= 64);
        let mask = if m == 64 { mask } else { mask & ((1u64 << m) - 1) };
        VertexSet { m, words: vec![mask] }
    }

    pub(crate) fn from_words(m: usize, words: Vec<u64>) -> Self {
        VertexSet { m, words }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.m
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.m && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.m, "vertex {v} outside universe of size {}", self.m);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.m {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `V ∖ self` within the universe.
    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.m).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
            && self.words.len() <= other.words.len()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection_len(other) == 0
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.m, other.m, "vertex sets over different universes");
        VertexSet {
            m: self.m,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}
