//! Graphviz DOT export with optional per-block coloring.

use std::fmt::Write as _;

use crate::family::BlockFamily;
use crate::graph::Digraph;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Nodes in one highlighted block are filled with its color; nodes shared by
/// several blocks get a wedged fill listing each color. Arcs inside a block
/// take the color of the first such block.
pub fn export_dot(g: &Digraph, highlight: Option<&BlockFamily>) -> String {
    let blocks = highlight.map(BlockFamily::blocks).unwrap_or(&[]);
    let color = |i: usize| PALETTE[i % PALETTE.len()];
    let mut out = String::from("digraph G {\n");
    for v in g.vertices() {
        let colors: Vec<&str> = blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.contains(v))
            .map(|(i, _)| color(i))
            .collect();
        let _ = match colors.as_slice() {
            [] => writeln!(out, "  {v};"),
            [c] => writeln!(out, "  {v} [style=filled, fillcolor=\"{c}\"];"),
            many => writeln!(
                out,
                "  {v} [style=wedged, fillcolor=\"{}\"];",
                many.join(":")
            ),
        };
    }
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    for e in edges {
        match blocks
            .iter()
            .position(|b| b.contains(e.tail) && b.contains(e.head))
        {
            Some(i) => writeln!(out, "  {} -> {} [color=\"{}\"];", e.tail, e.head, color(i)),
            None => writeln!(out, "  {} -> {};", e.tail, e.head),
        }
        .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
