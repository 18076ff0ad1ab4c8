//! Graph product constructors.
//!
//! All pair products use row-major vertex indexing: `(u, v)` of `g × h` maps
//! to index `u * |h| + v`, and product vertices are labeled `v_{u,v}`. The
//! corona places the `|g|` center vertices first, then the i-th copy of `h`
//! at indices `|g| + i*|h| .. |g| + (i+1)*|h|`.

use std::fmt;

use crate::family::{build_family, FamilyError, FamilySpec};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductOp {
    Cartesian,
    Strong,
    Lexicographic,
    Corona,
}

impl ProductOp {
    /// The operator keyword used in expressions and certificates.
    pub fn keyword(&self) -> &'static str {
        match self {
            ProductOp::Cartesian => "box",
            ProductOp::Strong => "strong",
            ProductOp::Lexicographic => "lex",
            ProductOp::Corona => "corona",
        }
    }
}

impl fmt::Display for ProductOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A graph-valued expression: a named family or a product of two expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Family(FamilySpec),
    Product(ProductOp, Box<GraphExpr>, Box<GraphExpr>),
}

impl GraphExpr {
    pub fn product(op: ProductOp, left: GraphExpr, right: GraphExpr) -> GraphExpr {
        GraphExpr::Product(op, Box::new(left), Box::new(right))
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            GraphExpr::Family(spec) => build_family(spec),
            GraphExpr::Product(op, left, right) => {
                let g = left.build()?;
                let h = right.build()?;
                Ok(apply_product(*op, &g, &h)?)
            }
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Family(spec) => write!(f, "{spec}"),
            GraphExpr::Product(op, l, r) => write!(f, "({l} {op} {r})"),
        }
    }
}

pub fn apply_product(op: ProductOp, g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    match op {
        ProductOp::Cartesian => cartesian_product(g, h),
        ProductOp::Strong => strong_product(g, h),
        ProductOp::Lexicographic => lexicographic_product(g, h),
        ProductOp::Corona => corona(g, h),
    }
}

fn labeled_pair_graph(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let order = g
        .order()
        .checked_mul(h.order())
        .ok_or(GraphError::InvalidOrder)?;
    let mut p = Graph::edgeless(order)?;
    for u in 0..g.order() {
        for v in 0..h.order() {
            p.set_label(u * h.order() + v, format!("v_{{{u},{v}}}"));
        }
    }
    Ok(p)
}

/// `(u,v) ~ (u',v')` iff `u = u'` and `vv' ∈ E(h)`, or `v = v'` and `uu' ∈ E(g)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let nh = h.order();
    let mut p = labeled_pair_graph(g, h)?;
    for u in 0..g.order() {
        for (a, b) in h.edges() {
            p.add_edge(u * nh + a, u * nh + b)?;
        }
    }
    for (a, b) in g.edges() {
        for v in 0..nh {
            p.add_edge(a * nh + v, b * nh + v)?;
        }
    }
    Ok(p)
}

/// Cartesian edges plus the diagonal edges `uu' ∈ E(g)` and `vv' ∈ E(h)`.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let nh = h.order();
    let mut p = cartesian_product(g, h)?;
    for (a, b) in g.edges() {
        for (c, d) in h.edges() {
            p.add_edge(a * nh + c, b * nh + d)?;
            p.add_edge(a * nh + d, b * nh + c)?;
        }
    }
    Ok(p)
}

/// `(u,v) ~ (u',v')` iff `uu' ∈ E(g)`, or `u = u'` and `vv' ∈ E(h)`.
/// Not commutative in general.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let nh = h.order();
    let mut p = labeled_pair_graph(g, h)?;
    for u in 0..g.order() {
        for (a, b) in h.edges() {
            p.add_edge(u * nh + a, u * nh + b)?;
        }
    }
    for (a, b) in g.edges() {
        for v in 0..nh {
            for w in 0..nh {
                p.add_edge(a * nh + v, b * nh + w)?;
            }
        }
    }
    Ok(p)
}

/// One copy of `g` plus `|g|` copies of `h`, the i-th copy fully joined to
/// center `i`. Order is `|g||h| + |g|`; centers come first.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let m = g.order();
    let nh = h.order();
    let order = m
        .checked_mul(nh)
        .and_then(|x| x.checked_add(m))
        .ok_or(GraphError::InvalidOrder)?;
    let mut p = Graph::edgeless(order)?;
    for (a, b) in g.edges() {
        p.add_edge(a, b)?;
    }
    for i in 0..m {
        let base = m + i * nh;
        for (a, b) in h.edges() {
            p.add_edge(base + a, base + b)?;
        }
        for v in 0..nh {
            p.add_edge(i, base + v)?;
        }
    }
    Ok(p)
}

/// Index of the pair `(u, v)` in a pair product of `g` with an `nh`-vertex
/// second factor.
#[inline]
pub fn pair_index(nh: usize, u: usize, v: usize) -> usize {
    u * nh + v
}
