//! The standard color-change rule and the set predicates built on it.
//!
//! A blue vertex with exactly one white neighbor forces that neighbor blue.
//! The derived coloring is the fixed point of iterating the rule; it does not
//! depend on the order in which forcers fire, so the engine uses the lowest
//! vertex index as a deterministic tie-break when recording chains.

use std::fmt;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// An ordered record of `(forcer, forced)` steps deriving a coloring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ForceChain {
    pub steps: Vec<(usize, usize)>,
}

impl ForceChain {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the chain from `initial`, checking that each forced vertex is
    /// the forcer's unique white neighbor at its step. Returns the final set,
    /// or the index of the first invalid step.
    pub fn replay(&self, g: &Graph, initial: &VertexSet) -> Result<VertexSet, usize> {
        let mut blue = *initial;
        for (i, &(forcer, forced)) in self.steps.iter().enumerate() {
            if forcer >= g.order() || forced >= g.order() || !blue.contains(forcer) {
                return Err(i);
            }
            let whites = g.neighbors(forcer) - blue;
            if whites.len() != 1 || !whites.contains(forced) {
                return Err(i);
            }
            blue.insert(forced);
        }
        Ok(blue)
    }
}

/// One step per line, `u -> v`.
impl fmt::Display for ForceChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (u, v)) in self.steps.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{u} -> {v}")?;
        }
        Ok(())
    }
}

/// Applies the color-change rule once: returns the lowest-indexed blue vertex
/// with exactly one white neighbor, paired with that neighbor.
pub fn apply_rule_once(g: &Graph, blue: &VertexSet) -> Option<(usize, usize)> {
    debug_assert!(blue.is_subset_of(&g.vertex_set()));
    for u in blue.iter() {
        let whites = g.neighbors(u) - *blue;
        if whites.len() == 1 {
            return Some((u, whites.lowest().expect("non-empty")));
        }
    }
    None
}

/// Fixed point of the color-change rule, without recording a chain.
pub fn derived_set(g: &Graph, initial: &VertexSet) -> VertexSet {
    let full = g.vertex_set();
    let mut blue = *initial & full;
    // candidates: blue vertices that may still have a white neighbor. A
    // vertex whose white count reaches zero can never force later.
    let mut candidates = blue;
    'outer: loop {
        for u in candidates.iter() {
            let whites = g.neighbors(u) - blue;
            match whites.len() {
                0 => candidates.remove(u),
                1 => {
                    let v = whites.lowest().expect("non-empty");
                    blue.insert(v);
                    if blue == full {
                        return blue;
                    }
                    candidates.insert(v);
                    continue 'outer;
                }
                _ => {}
            }
        }
        return blue;
    }
}

/// Fixed point of the color-change rule with the replayable chain, forcers
/// chosen lowest-index first.
pub fn derived_coloring(g: &Graph, initial: &VertexSet) -> (VertexSet, ForceChain) {
    let full = g.vertex_set();
    let mut blue = *initial & full;
    let mut chain = ForceChain::default();
    let mut candidates = blue;
    'outer: loop {
        for u in candidates.iter() {
            let whites = g.neighbors(u) - blue;
            match whites.len() {
                0 => candidates.remove(u),
                1 => {
                    let v = whites.lowest().expect("non-empty");
                    blue.insert(v);
                    chain.steps.push((u, v));
                    candidates.insert(v);
                    continue 'outer;
                }
                _ => {}
            }
        }
        return (blue, chain);
    }
}

/// True iff the derived coloring of `s` is all of `V(g)`.
pub fn is_zero_forcing_set(g: &Graph, s: &VertexSet) -> bool {
    derived_set(g, s) == g.vertex_set()
}

/// True iff `s` leaves at least one white vertex; the full vertex set is
/// never failed.
pub fn is_failed(g: &Graph, s: &VertexSet) -> bool {
    !is_zero_forcing_set(g, s)
}

/// True iff `s` is a proper subset of `V(g)` from which no force is possible.
pub fn is_stalled(g: &Graph, s: &VertexSet) -> bool {
    *s != g.vertex_set() && apply_rule_once(g, s).is_none()
}

/// True iff `s` is failed and adding any single missing vertex yields a zero
/// forcing set. Supersets are tried in increasing vertex order, stopping at
/// the first one that fails to force.
pub fn is_maximal_failed(g: &Graph, s: &VertexSet) -> bool {
    if !is_failed(g, s) {
        return false;
    }
    for v in s.complement_within(g.order()).iter() {
        let mut bigger = *s;
        bigger.insert(v);
        if !is_zero_forcing_set(g, &bigger) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    #[test]
    fn apply_rule_once_examples() {
        let p3 = fam(FamilySpec::Path { n: 3 });
        assert_eq!(apply_rule_once(&p3, &VertexSet::singleton(0)), Some((0, 1)));

        let c4 = fam(FamilySpec::Cycle { n: 4 });
        assert_eq!(apply_rule_once(&c4, &VertexSet::singleton(0)), None);

        let k4 = fam(FamilySpec::Complete { n: 4 });
        assert_eq!(
            apply_rule_once(&k4, &VertexSet::from_indices([0, 1, 2])),
            Some((0, 3))
        );
    }

    #[test]
    fn derived_coloring_examples() {
        let p5 = fam(FamilySpec::Path { n: 5 });
        let (fin, chain) = derived_coloring(&p5, &VertexSet::singleton(0));
        assert_eq!(fin, p5.vertex_set());
        assert_eq!(chain.steps, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);

        let c6 = fam(FamilySpec::Cycle { n: 6 });
        let start = VertexSet::from_indices([0, 2, 4]);
        let (fin, chain) = derived_coloring(&c6, &start);
        assert_eq!(fin, start);
        assert!(chain.is_empty());

        let (fin, chain) = derived_coloring(&c6, &VertexSet::empty());
        assert!(fin.is_empty());
        assert!(chain.is_empty());
    }

    #[test]
    fn chains_replay() {
        for (spec, start) in [
            (FamilySpec::Path { n: 7 }, VertexSet::from_indices([3, 4])),
            (
                FamilySpec::Petersen,
                VertexSet::from_indices([0, 1, 2, 5, 6]),
            ),
            (
                FamilySpec::Wheel { n: 6 },
                VertexSet::from_indices([0, 1, 5]),
            ),
        ] {
            let g = fam(spec);
            let (fin, chain) = derived_coloring(&g, &start);
            assert_eq!(chain.replay(&g, &start), Ok(fin));
        }
        // a corrupted chain is rejected at the right step
        let p3 = fam(FamilySpec::Path { n: 3 });
        let bad = ForceChain {
            steps: vec![(0, 1), (0, 1)],
        };
        assert_eq!(bad.replay(&p3, &VertexSet::singleton(0)), Err(1));
    }

    #[test]
    fn zero_forcing_examples() {
        for n in 2..=12 {
            let p = fam(FamilySpec::Path { n });
            assert!(is_zero_forcing_set(&p, &VertexSet::singleton(0)));
            assert!(is_zero_forcing_set(&p, &VertexSet::singleton(n - 1)));
            for i in 0..n - 1 {
                assert!(is_zero_forcing_set(
                    &p,
                    &VertexSet::from_indices([i, i + 1])
                ));
            }
        }
        let c4 = fam(FamilySpec::Cycle { n: 4 });
        assert!(!is_zero_forcing_set(&c4, &VertexSet::singleton(0)));
    }

    #[test]
    fn failed_examples() {
        let k4 = fam(FamilySpec::Complete { n: 4 });
        assert!(is_failed(&k4, &VertexSet::from_indices([0, 1])));

        let p4 = fam(FamilySpec::Path { n: 4 });
        assert!(!is_failed(&p4, &VertexSet::singleton(0)));

        let k1 = fam(FamilySpec::Complete { n: 1 });
        assert!(is_failed(&k1, &VertexSet::empty()));
        assert!(!is_failed(&k1, &VertexSet::singleton(0)));
    }

    #[test]
    fn stalled_examples() {
        let c6 = fam(FamilySpec::Cycle { n: 6 });
        assert!(is_stalled(&c6, &VertexSet::from_indices([0, 2, 4])));

        let p3 = fam(FamilySpec::Path { n: 3 });
        assert!(!is_stalled(&p3, &VertexSet::singleton(0)));

        let c4 = fam(FamilySpec::Cycle { n: 4 });
        assert!(!is_stalled(&c4, &c4.vertex_set()));
    }

    #[test]
    fn maximal_failed_examples() {
        let c4 = fam(FamilySpec::Cycle { n: 4 });
        assert!(is_maximal_failed(&c4, &VertexSet::from_indices([0, 2])));

        // failed but not maximal: {0,1} is a larger failed set
        let k4 = fam(FamilySpec::Complete { n: 4 });
        assert!(!is_maximal_failed(&k4, &VertexSet::singleton(0)));

        // both supersets of {1} force the path
        let p3 = fam(FamilySpec::Path { n: 3 });
        assert!(is_maximal_failed(&p3, &VertexSet::singleton(1)));
    }
}
