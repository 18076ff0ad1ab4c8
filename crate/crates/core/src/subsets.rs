//! Lexicographic enumeration of fixed-size vertex subsets.
//!
//! Combinations of `{0..n-1}` taken `k` at a time are ordered
//! lexicographically on their ascending index sequences. Unranking lets the
//! search partition the combination space into contiguous rank ranges that
//! independent workers can scan without coordination.

use crate::bitset::VertexSet;

/// Binomial coefficient in wide arithmetic; saturates instead of overflowing.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// The combination of rank `rank` (0-based, lexicographic order).
pub fn unrank(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    debug_assert!(rank < binomial(n, k));
    let mut combo = Vec::with_capacity(k);
    let mut v = 0usize;
    for slot in 0..k {
        loop {
            // combinations that pick v here and fill the remaining slots
            let here = binomial(n - v - 1, k - slot - 1);
            if rank < here {
                combo.push(v);
                v += 1;
                break;
            }
            rank -= here;
            v += 1;
        }
    }
    combo
}

/// Iterator over the size-`k` subsets of `{0..n-1}` in lexicographic order,
/// optionally restricted to a contiguous rank range.
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
    remaining: u128,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Combinations {
        Combinations::range(n, k, 0, binomial(n, k))
    }

    /// Combinations with ranks in `[start, end)`.
    pub fn range(n: usize, k: usize, start: u128, end: u128) -> Combinations {
        let total = binomial(n, k);
        let end = end.min(total);
        if start >= end {
            return Combinations {
                n,
                current: None,
                remaining: 0,
            };
        }
        Combinations {
            n,
            current: Some(unrank(n, k, start)),
            remaining: end - start,
        }
    }

    fn advance(combo: &mut [usize], n: usize) -> bool {
        let k = combo.len();
        if k == 0 {
            return false;
        }
        // find the rightmost slot that can still move up
        let mut i = k;
        while i > 0 {
            i -= 1;
            if combo[i] < n - k + i {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.remaining == 0 {
            return None;
        }
        let combo = self.current.as_mut()?;
        let set = VertexSet::from_indices(combo.iter().copied());
        self.remaining -= 1;
        if self.remaining > 0 && !Self::advance(combo, self.n) {
            self.remaining = 0;
        }
        Some(set)
    }
}
