//! Edge-list text format.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        (m edge lines, 0 <= u < v < n; sorted lexicographically on output)
//! L i text   (optional label lines after the edges)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header, expected `n m`")]
    MalformedHeader,
    #[error("graph order must be at least 1")]
    InvalidOrder,
    #[error("graph order {0} exceeds capacity {MAX_VERTICES}")]
    CapacityExceeded(usize),
    #[error("malformed edge, expected `u v`")]
    MalformedEdge,
    #[error("vertex index {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} edges, found {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("malformed label line, expected `L i text`")]
    MalformedLabel,
    #[error("unexpected content after labels")]
    TrailingContent,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses the edge-list format. Duplicate edges (in either orientation) and
/// loops are hard errors.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or(err(1, ParseErrorKind::MalformedHeader))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(err(header_line, ParseErrorKind::MalformedHeader))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(err(header_line, ParseErrorKind::MalformedHeader))?;
    if it.next().is_some() {
        return Err(err(header_line, ParseErrorKind::MalformedHeader));
    }
    if n == 0 {
        return Err(err(header_line, ParseErrorKind::InvalidOrder));
    }
    if n > MAX_VERTICES {
        return Err(err(header_line, ParseErrorKind::CapacityExceeded(n)));
    }

    let mut g = Graph::edgeless(n).expect("order validated");
    let mut found = 0usize;
    let mut last_line = header_line;
    let mut labels_started = false;

    for (lineno, line) in lines {
        last_line = lineno;
        if let Some(rest) = line.strip_prefix("L ").or_else(|| line.strip_prefix("L\t")) {
            if found < m {
                return Err(err(
                    lineno,
                    ParseErrorKind::MissingEdges { expected: m, found },
                ));
            }
            labels_started = true;
            let rest = rest.trim();
            let (idx, text) = rest
                .split_once(char::is_whitespace)
                .ok_or(err(lineno, ParseErrorKind::MalformedLabel))?;
            let v: usize = idx
                .parse()
                .map_err(|_| err(lineno, ParseErrorKind::MalformedLabel))?;
            if v >= n {
                return Err(err(
                    lineno,
                    ParseErrorKind::VertexOutOfRange {
                        vertex: v,
                        order: n,
                    },
                ));
            }
            g.set_label(v, text.trim());
            continue;
        }
        if labels_started {
            return Err(err(lineno, ParseErrorKind::TrailingContent));
        }
        if found == m {
            return Err(err(lineno, ParseErrorKind::TrailingContent));
        }
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(err(lineno, ParseErrorKind::MalformedEdge))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(err(lineno, ParseErrorKind::MalformedEdge))?;
        if it.next().is_some() {
            return Err(err(lineno, ParseErrorKind::MalformedEdge));
        }
        for w in [u, v] {
            if w >= n {
                return Err(err(
                    lineno,
                    ParseErrorKind::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    },
                ));
            }
        }
        if u == v {
            return Err(err(lineno, ParseErrorKind::Loop(u)));
        }
        if g.has_edge(u, v) {
            return Err(err(lineno, ParseErrorKind::DuplicateEdge(u, v)));
        }
        g.add_edge(u, v).expect("vertices validated");
        found += 1;
    }

    if found < m {
        return Err(err(
            last_line,
            ParseErrorKind::MissingEdges { expected: m, found },
        ));
    }
    Ok(g)
}

/// Serializes to the edge-list format; `parse_graph(serialize_graph(g)) == g`.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    for v in 0..g.order() {
        if let Some(label) = g.label(v) {
            let _ = writeln!(out, "L {v} {label}");
        }
    }
    out
}
