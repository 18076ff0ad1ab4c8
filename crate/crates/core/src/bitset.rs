//! Fixed-width vertex sets backed by machine words.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use thiserror::Error;

/// Largest graph order supported by the library.
pub const MAX_VERTICES: usize = 128;

const WORDS: usize = MAX_VERTICES / 64;

/// A subset of the vertices `0..MAX_VERTICES`, stored as a bit vector.
///
/// This is the universal currency for blue sets, witnesses and
/// construction outputs. All operations are word-parallel.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    pub fn empty() -> Self {
        Self::EMPTY
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex set capacity exceeded");
        let mut s = Self::EMPTY;
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Lowest-index member, if any.
    #[inline]
    pub fn lowest(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Highest-index member, if any.
    #[inline]
    pub fn highest(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    /// `{0..n-1} \ self`.
    pub fn complement_within(&self, n: usize) -> VertexSet {
        let mut out = Self::full(n);
        out -= *self;
        out
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter {
            set: *self,
            word: 0,
        }
    }
}

pub struct Iter {
    set: VertexSet,
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.set.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.set.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(mut self, rhs: VertexSet) -> VertexSet {
        self |= rhs;
        self
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a |= b;
        }
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(mut self, rhs: VertexSet) -> VertexSet {
        self &= rhs;
        self
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a &= b;
        }
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        self -= rhs;
        self
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a &= !b;
        }
    }
}

/// Formats as comma-separated ascending indices, `-` for the empty set.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetParseError {
    #[error("empty item in set expression")]
    EmptyItem,
    #[error("invalid index `{0}`")]
    InvalidIndex(String),
    #[error("descending range {0}-{1}")]
    DescendingRange(usize, usize),
    #[error("index {0} exceeds capacity {MAX_VERTICES}")]
    OutOfCapacity(usize),
}

/// Parses the command-line set syntax: comma-separated 0-based indices with
/// optional ranges `a-b`. A single `-` (or the empty string) is the empty set.
pub fn parse_vertex_set(text: &str) -> Result<VertexSet, SetParseError> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(VertexSet::empty());
    }
    let mut set = VertexSet::empty();
    for item in text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(SetParseError::EmptyItem);
        }
        let parse_one = |s: &str| -> Result<usize, SetParseError> {
            let v: usize = s
                .trim()
                .parse()
                .map_err(|_| SetParseError::InvalidIndex(s.trim().to_string()))?;
            if v >= MAX_VERTICES {
                return Err(SetParseError::OutOfCapacity(v));
            }
            Ok(v)
        };
        match item.split_once('-') {
            Some((a, b)) => {
                let lo = parse_one(a)?;
                let hi = parse_one(b)?;
                if lo > hi {
                    return Err(SetParseError::DescendingRange(lo, hi));
                }
                for v in lo..=hi {
                    set.insert(v);
                }
            }
            None => set.insert(parse_one(item)?),
        }
    }
    Ok(set)
}
