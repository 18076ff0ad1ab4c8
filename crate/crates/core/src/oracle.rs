//! Exhaustive and structural computation of the zero forcing number and the
//! failed zero forcing number, with machine-checkable certificates.
//!
//! The exhaustive search scans subset sizes (ascending for the zero forcing
//! number, descending for the failed number) and within a size enumerates
//! combinations lexicographically, so the reported witness is deterministic.
//! The combination space of a size may be partitioned into contiguous rank
//! chunks scanned by parallel workers; results are merged by chunk order, so
//! output is identical to a single-threaded scan.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::forcing::{derived_set, is_failed};
use crate::graph::Graph;
use crate::subsets::{binomial, Combinations};

/// Which graph invariant a certificate pins down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stat {
    /// Minimum size of a zero forcing set.
    Z,
    /// Maximum size of a failed zero forcing set.
    F,
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stat::Z => "Z",
            Stat::F => "F",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Exhaustive,
    Structural,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Exhaustive => "exhaustive",
            Route::Structural => "structural",
        })
    }
}

/// A claimed invariant value tied to a witness set and the route that
/// established it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub target: Stat,
    pub value: usize,
    pub witness: VertexSet,
    pub route: Route,
    pub basis: Option<String>,
}

impl Certificate {
    /// Re-checks the witness against the forcing predicates: a `Z` witness
    /// must force, an `F` witness must fail, and its size must equal `value`.
    pub fn verify_witness(&self, g: &Graph) -> bool {
        if !self.witness.is_subset_of(&g.vertex_set()) || self.witness.len() != self.value {
            return false;
        }
        match self.target {
            Stat::Z => derived_set(g, &self.witness) == g.vertex_set(),
            Stat::F => is_failed(g, &self.witness),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ExactOptions {
    /// Largest graph order the exhaustive search will accept.
    pub cap: usize,
    /// Worker threads for subset enumeration.
    pub workers: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            cap: DEFAULT_CAP,
            workers: 1,
        }
    }
}

/// Default exhaustive cap. The worst case is a full 2^cap subset scan.
pub const DEFAULT_CAP: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("graph order {order} exceeds exhaustive cap {cap}")]
pub struct CapacityError {
    pub order: usize,
    pub cap: usize,
}

fn check_cap(g: &Graph, opts: &ExactOptions) -> Result<(), CapacityError> {
    if g.order() > opts.cap {
        Err(CapacityError {
            order: g.order(),
            cap: opts.cap,
        })
    } else {
        Ok(())
    }
}

/// Lexicographically first size-`k` subset S with
/// `is_zero_forcing_set(S) == want_forcing`, or `None`.
fn first_match(g: &Graph, k: usize, want_forcing: bool, workers: usize) -> Option<VertexSet> {
    let n = g.order();
    let full = g.vertex_set();
    let accepts = |s: &VertexSet| (derived_set(g, s) == full) == want_forcing;

    let total = binomial(n, k);
    const SEQUENTIAL_CUTOFF: u128 = 512;
    if workers <= 1 || total <= SEQUENTIAL_CUTOFF {
        return Combinations::new(n, k).find(accepts);
    }

    let chunk_size = (total / (workers as u128 * 8) + 1).max(512);
    let chunk_count = total.div_ceil(chunk_size);
    let next_chunk = AtomicU64::new(0);
    // chunk index of the best hit so far; only ever decreases
    let best_chunk = AtomicU64::new(u64::MAX);
    let found: Mutex<Option<(u64, VertexSet)>> = Mutex::new(None);

    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let chunk = next_chunk.fetch_add(1, Ordering::Relaxed);
                if chunk as u128 >= chunk_count || best_chunk.load(Ordering::Acquire) < chunk {
                    // chunks are issued in ascending order, so nothing this
                    // worker could still scan would beat the current hit
                    return;
                }
                let start = chunk as u128 * chunk_size;
                let mut scanned = 0u32;
                for s in Combinations::range(n, k, start, start + chunk_size) {
                    scanned += 1;
                    if scanned.is_multiple_of(1024) && best_chunk.load(Ordering::Acquire) < chunk {
                        break;
                    }
                    if accepts(&s) {
                        let mut guard = found.lock().unwrap();
                        let better = match *guard {
                            None => true,
                            Some((c, _)) => chunk < c,
                        };
                        if better {
                            *guard = Some((chunk, s));
                            best_chunk.store(chunk, Ordering::Release);
                        }
                        return;
                    }
                }
            });
        }
    });

    let result = found.into_inner().unwrap();
    result.map(|(_, s)| s)
}

/// Smallest `k` admitting a zero forcing set of size `k`, with the
/// lexicographically least witness. Refuses graphs above the cap.
pub fn zero_forcing_number(g: &Graph, opts: &ExactOptions) -> Result<Certificate, CapacityError> {
    check_cap(g, opts)?;
    let workers = opts.workers.max(1);
    for k in 0..=g.order() {
        if let Some(witness) = first_match(g, k, true, workers) {
            return Ok(Certificate {
                target: Stat::Z,
                value: k,
                witness,
                route: Route::Exhaustive,
                basis: None,
            });
        }
    }
    unreachable!("the full vertex set always forces");
}

/// Largest `k` admitting a failed set of size `k`, searched downward from
/// `n - 1`, with the lexicographically least witness per size.
pub fn failed_zero_forcing_number(
    g: &Graph,
    opts: &ExactOptions,
) -> Result<Certificate, CapacityError> {
    check_cap(g, opts)?;
    let workers = opts.workers.max(1);
    for k in (0..g.order()).rev() {
        if let Some(witness) = first_match(g, k, false, workers) {
            return Ok(Certificate {
                target: Stat::F,
                value: k,
                witness,
                route: Route::Exhaustive,
                basis: None,
            });
        }
    }
    unreachable!("the empty set never forces a non-empty graph");
}

/// Why a structural upper bound on the failed zero forcing number applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundBasis {
    /// An isolated vertex exists: the maximum failed set size is `n - 1`.
    IsolatedVertex,
    /// Connected with a module of order 2: the maximum is exactly `n - 2`.
    ModuleOfOrderTwo,
    /// Connected, no isolated vertex, no order-2 module: at most `n - 3`.
    ConnectedNoModule,
    /// Disconnected without isolated vertices: at most `n - 2`, since only
    /// graphs with an isolated vertex reach `n - 1`.
    NoIsolatedVertex,
}

impl fmt::Display for BoundBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundBasis::IsolatedVertex => "isolated-vertex",
            BoundBasis::ModuleOfOrderTwo => "module-of-order-2",
            BoundBasis::ConnectedNoModule => "connected-no-module-of-order-2",
            BoundBasis::NoIsolatedVertex => "no-isolated-vertex",
        })
    }
}

/// Structural upper bound on the maximum failed set size, from the
/// isolated-vertex and order-2-module characterizations.
pub fn structural_upper_bound(g: &Graph) -> (usize, BoundBasis) {
    let n = g.order();
    if !g.isolated_vertices().is_empty() {
        return (n - 1, BoundBasis::IsolatedVertex);
    }
    if g.is_connected() {
        if g.modules_of_order_two().is_empty() {
            // connected graphs without modules have at least 4 vertices
            (n.saturating_sub(3), BoundBasis::ConnectedNoModule)
        } else {
            (n - 2, BoundBasis::ModuleOfOrderTwo)
        }
    } else {
        (n - 2, BoundBasis::NoIsolatedVertex)
    }
}

/// Outcome of checking a constructed failed set against the structural bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SharpnessVerdict {
    /// The set is failed and meets the structural bound: its size is exactly
    /// the failed zero forcing number.
    Exact(Certificate),
    /// The set is failed but smaller than the structural bound, so it only
    /// witnesses a lower bound.
    LowerBoundOnly {
        size: usize,
        bound: usize,
        basis: BoundBasis,
    },
    /// The set forces the whole graph, so it certifies nothing.
    NotFailed,
}

/// Pins the failed zero forcing number without exhaustive search: a failed
/// set whose size meets the structural upper bound is maximum.
pub fn verify_sharpness(g: &Graph, set: &VertexSet) -> SharpnessVerdict {
    if !is_failed(g, set) {
        return SharpnessVerdict::NotFailed;
    }
    let (bound, basis) = structural_upper_bound(g);
    let size = set.len();
    if size == bound {
        SharpnessVerdict::Exact(Certificate {
            target: Stat::F,
            value: bound,
            witness: *set,
            route: Route::Structural,
            basis: Some(basis.to_string()),
        })
    } else {
        debug_assert!(size < bound, "failed set exceeds the structural bound");
        SharpnessVerdict::LowerBoundOnly { size, bound, basis }
    }
}
