//! Named graph family generators.
//!
//! Vertex orderings are fixed per family so constructions and certificates
//! can refer to concrete indices:
//! - path/cycle: traversal order
//! - complete bipartite: part A (`m` vertices) then part B (`n` vertices)
//! - wheel on `n` vertices: rim cycle `0..n-2`, hub last
//! - Petersen: outer 5-cycle `0..=4`, inner 5-cycle `5..=9`, spokes `i -- i+5`
//! - m-ary tree: complete tree of the given depth, breadth-first indices

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {constraint}")]
    InvalidParameter {
        family: &'static str,
        constraint: &'static str,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` expects {expected} parameter(s)")]
    WrongArity {
        family: &'static str,
        expected: usize,
    },
    #[error("invalid integer parameter `{0}`")]
    BadInteger(String),
}

/// Declarative descriptor of a named graph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    /// `n` total vertices: a hub joined to a rim cycle on `n - 1` vertices.
    Wheel {
        n: usize,
    },
    Petersen,
    /// Complete `arity`-ary tree with root-to-leaf distance `depth`.
    MaryTree {
        arity: usize,
        depth: usize,
    },
    Empty {
        n: usize,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let err = |family, constraint| Err(FamilyError::InvalidParameter { family, constraint });
        match *self {
            FamilySpec::Path { n } if n < 1 => err("path", "requires n >= 1"),
            FamilySpec::Cycle { n } if n < 3 => err("cycle", "requires n >= 3"),
            FamilySpec::Complete { n } if n < 1 => err("complete", "requires n >= 1"),
            FamilySpec::CompleteBipartite { m, n } if m < 1 || n < 1 => {
                err("complete_bipartite", "requires m, n >= 1")
            }
            FamilySpec::Wheel { n } if n < 4 => err("wheel", "requires n >= 4"),
            FamilySpec::MaryTree { arity, .. } if arity < 2 => {
                err("mary_tree", "requires arity >= 2")
            }
            FamilySpec::MaryTree { depth, .. } if depth < 1 => {
                err("mary_tree", "requires depth >= 1")
            }
            FamilySpec::Empty { n } if n < 1 => err("empty", "requires n >= 1"),
            _ => Ok(()),
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Empty { n } => n,
            FamilySpec::CompleteBipartite { m, n } => m + n,
            FamilySpec::Petersen => 10,
            FamilySpec::MaryTree { arity, depth } => {
                // 1 + a + a^2 + ... + a^depth
                let mut total = 1usize;
                let mut level = 1usize;
                for _ in 0..depth {
                    level = level.saturating_mul(arity);
                    total = total.saturating_add(level);
                }
                total
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite { m, n } => write!(f, "complete_bipartite:{m}:{n}"),
            FamilySpec::Wheel { n } => write!(f, "wheel:{n}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::MaryTree { arity, depth } => write!(f, "mary_tree:{arity}:{depth}"),
            FamilySpec::Empty { n } => write!(f, "empty:{n}"),
        }
    }
}

/// Parses `name` or `name:p1[:p2]`, e.g. `path:4`, `mary_tree:2:3`, `petersen`.
impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        let int = |s: &str| -> Result<usize, FamilyError> {
            s.parse()
                .map_err(|_| FamilyError::BadInteger(s.to_string()))
        };
        let arity_err = |family, expected| FamilyError::WrongArity { family, expected };
        let spec = match name {
            "path" | "cycle" | "complete" | "wheel" | "empty" => {
                if params.len() != 1 {
                    return Err(arity_err(
                        match name {
                            "path" => "path",
                            "cycle" => "cycle",
                            "complete" => "complete",
                            "wheel" => "wheel",
                            _ => "empty",
                        },
                        1,
                    ));
                }
                let n = int(params[0])?;
                match name {
                    "path" => FamilySpec::Path { n },
                    "cycle" => FamilySpec::Cycle { n },
                    "complete" => FamilySpec::Complete { n },
                    "wheel" => FamilySpec::Wheel { n },
                    _ => FamilySpec::Empty { n },
                }
            }
            "complete_bipartite" => {
                if params.len() != 2 {
                    return Err(arity_err("complete_bipartite", 2));
                }
                FamilySpec::CompleteBipartite {
                    m: int(params[0])?,
                    n: int(params[1])?,
                }
            }
            "mary_tree" => {
                if params.len() != 2 {
                    return Err(arity_err("mary_tree", 2));
                }
                FamilySpec::MaryTree {
                    arity: int(params[0])?,
                    depth: int(params[1])?,
                }
            }
            "petersen" => {
                if !params.is_empty() {
                    return Err(arity_err("petersen", 0));
                }
                FamilySpec::Petersen
            }
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the canonical graph for a family descriptor.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Path { n } => Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?,
        FamilySpec::Cycle { n } => Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?,
        FamilySpec::Complete { n } => {
            let mut g = Graph::edgeless(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            g
        }
        FamilySpec::CompleteBipartite { m, n } => {
            let mut g = Graph::edgeless(m + n)?;
            for u in 0..m {
                for v in m..m + n {
                    g.add_edge(u, v)?;
                }
            }
            g
        }
        FamilySpec::Wheel { n } => {
            let rim = n - 1;
            let hub = n - 1;
            let mut g = Graph::edgeless(n)?;
            for v in 0..rim {
                g.add_edge(v, (v + 1) % rim)?;
                g.add_edge(v, hub)?;
            }
            g
        }
        FamilySpec::Petersen => {
            let mut g = Graph::edgeless(10)?;
            for v in 0..5 {
                g.add_edge(v, (v + 1) % 5)?; // outer cycle
                g.add_edge(5 + v, 5 + (v + 2) % 5)?; // inner pentagram
                g.add_edge(v, v + 5)?; // spokes
            }
            g
        }
        FamilySpec::MaryTree { arity, depth: _ } => {
            let n = spec.order();
            let mut g = Graph::edgeless(n)?;
            for child in 1..n {
                g.add_edge((child - 1) / arity, child)?;
            }
            g
        }
        FamilySpec::Empty { n } => Graph::edgeless(n)?,
    };
    Ok(g)
}
