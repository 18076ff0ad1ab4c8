//! Simple undirected graphs with bit-vector adjacency rows.

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    InvalidOrder,
    #[error("graph order {requested} exceeds capacity {max}")]
    CapacityExceeded { requested: usize, max: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// An immutable simple undirected graph on at most [`MAX_VERTICES`] vertices.
///
/// Adjacency is stored as one [`VertexSet`] row per vertex; rows are kept
/// symmetric and loop-free by construction. Labels are optional per-vertex
/// strings carried through serialization.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    rows: Vec<VertexSet>,
    labels: Vec<Option<String>>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidOrder);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded {
                requested: n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            order: n,
            rows: vec![VertexSet::empty(); n],
            labels: vec![None; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an edge; intended for construction before the graph is shared.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.order {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                order: self.order,
            });
        }
        if v >= self.order {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The full vertex set `{0..order-1}`.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    pub fn is_complete(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(v, row)| row.len() == self.order - 1 && !row.contains(v))
    }

    /// Degree-zero vertices.
    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_indices((0..self.order).filter(|&v| self.rows[v].is_empty()))
    }

    pub fn connected_component_count(&self) -> usize {
        let mut seen = VertexSet::empty();
        let mut count = 0;
        for start in 0..self.order {
            if seen.contains(start) {
                continue;
            }
            count += 1;
            // bitset BFS: expand the frontier by whole neighbor rows
            let mut frontier = VertexSet::singleton(start);
            while !frontier.is_empty() {
                seen |= frontier;
                let mut next = VertexSet::empty();
                for v in frontier.iter() {
                    next |= self.rows[v];
                }
                frontier = next - seen;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.connected_component_count() == 1
    }

    /// All unordered pairs `{u, v}` with identical neighborhoods outside the
    /// pair, i.e. `N(u) \ {v} = N(v) \ {u}`, in lexicographic pair order.
    pub fn modules_of_order_two(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                let mut nu = self.rows[u];
                nu.remove(v);
                let mut nv = self.rows[v];
                nv.remove(u);
                if nu == nv {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced by `keep`, plus the map from new indices back to
    /// the original vertices (ascending).
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.order).collect();
        assert!(!old.is_empty(), "induced subgraph must be non-empty");
        let mut g = Graph::edgeless(old.len()).expect("subgraph within capacity");
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("valid edge");
                }
            }
            if let Some(label) = self.label(u) {
                g.set_label(i, label);
            }
        }
        (g, old)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.order, self.edge_count())
    }
}
