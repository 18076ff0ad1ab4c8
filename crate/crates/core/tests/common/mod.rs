//! Independent reference implementations used to validate the library.
//!
//! Everything here recomputes forcing from first principles: plain boolean
//! colorings, full rescans, and complete subset enumeration. None of it
//! shares code with the library's engine or search, so agreement is evidence,
//! not tautology.

// each integration test compiles its own copy and uses a different subset
#![allow(dead_code)]

use zforce::{Graph, VertexSet};

/// Fixpoint of the color-change rule by repeated full rescans, firing the
/// highest-indexed eligible forcer first.
pub fn naive_derived_highest_first(g: &Graph, initial: &VertexSet) -> VertexSet {
    let n = g.order();
    let mut blue = vec![false; n];
    for v in initial.iter() {
        blue[v] = true;
    }
    loop {
        let mut fired = false;
        for u in (0..n).rev() {
            if !blue[u] {
                continue;
            }
            let whites: Vec<usize> = (0..n).filter(|&w| g.has_edge(u, w) && !blue[w]).collect();
            if whites.len() == 1 {
                blue[whites[0]] = true;
                fired = true;
                break;
            }
        }
        if !fired {
            return VertexSet::from_indices((0..n).filter(|&v| blue[v]));
        }
    }
}

pub fn naive_is_forcing(g: &Graph, s: &VertexSet) -> bool {
    naive_derived_highest_first(g, s).len() == g.order()
}

fn mask_to_set(mask: u32) -> VertexSet {
    VertexSet::from_indices((0..32).filter(|&v| mask & (1 << v) != 0))
}

fn set_to_sorted(s: &VertexSet) -> Vec<usize> {
    s.iter().collect()
}

/// Maximum failed set size and its lexicographically least witness, by
/// complete enumeration of all subsets. Graphs up to ~20 vertices.
pub fn naive_max_failed(g: &Graph) -> (usize, VertexSet) {
    let n = g.order();
    assert!(n < 32);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0..1u32 << n {
        let s = mask_to_set(mask);
        if naive_is_forcing(g, &s) {
            continue;
        }
        let key = (s.len(), set_to_sorted(&s));
        best = match best {
            None => Some(key),
            Some(old) => {
                if key.0 > old.0 || (key.0 == old.0 && key.1 < old.1) {
                    Some(key)
                } else {
                    Some(old)
                }
            }
        };
    }
    let (size, witness) = best.expect("the empty set is always failed");
    (size, VertexSet::from_indices(witness))
}

/// Minimum zero forcing set size and its lexicographically least witness.
pub fn naive_min_forcing(g: &Graph) -> (usize, VertexSet) {
    let n = g.order();
    assert!(n < 32);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0..1u32 << n {
        let s = mask_to_set(mask);
        if !naive_is_forcing(g, &s) {
            continue;
        }
        let key = (s.len(), set_to_sorted(&s));
        best = match best {
            None => Some(key),
            Some(old) => {
                if key.0 < old.0 || (key.0 == old.0 && key.1 < old.1) {
                    Some(key)
                } else {
                    Some(old)
                }
            }
        };
    }
    let (size, witness) = best.expect("the full set always forces");
    (size, VertexSet::from_indices(witness))
}
