//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        (m lines, 0-based endpoints)
//! ```
//!
//! Blank lines are ignored. Errors carry 1-based line numbers.

use std::io::Read;

use thiserror::Error;

use crate::graph::{Digraph, Edge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing \"n m\" header")]
    MissingHeader,
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed arc, expected \"u v\"")]
    MalformedArc { line: usize },
    #[error("header declares {expected} arcs but {found} were given")]
    ArcCount { expected: usize, found: usize },
    #[error("line {line}: endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: duplicate arc {edge}")]
    DuplicateArc { line: usize, edge: Edge },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("read error: {0}")]
    Io(String),
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let a = fields.next()?.parse().ok()?;
    let b = fields.next()?.parse().ok()?;
    fields.next().is_none().then_some((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(header).ok_or(ParseError::MalformedHeader { line: header_line })?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, content) in lines {
        let (tail, head) = parse_pair(content).ok_or(ParseError::MalformedArc { line })?;
        for vertex in [tail, head] {
            if vertex >= n {
                return Err(ParseError::EndpointOutOfRange { line, vertex, n });
            }
        }
        if tail == head {
            return Err(ParseError::SelfLoop { line, vertex: tail });
        }
        let edge = Edge::new(tail, head);
        if !seen.insert(edge) {
            return Err(ParseError::DuplicateArc { line, edge });
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(ParseError::ArcCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Digraph::from_valid_edges(n, edges))
}

pub fn read_edge_list(mut reader: impl Read) -> Result<Digraph, ParseError> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| ParseError::Io(e.to_string()))?;
    parse_edge_list(&text)
}

/// Serializes `g` in arc insertion order; `parse_edge_list` inverts it.
pub fn write_edge_list(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.tail, e.head));
    }
    out
}
