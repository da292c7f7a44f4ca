//! Graphviz rendering with 2-edge-biconnected blocks colored. Pipe into
//! `dot -Tsvg`.
//!
//! cargo run --example dot_export > fig1.dot

use sbgraph::blocks::two_edge_biconnected_blocks;
use sbgraph::io::{export_dot, parse_edge_list};

fn main() {
    let g = parse_edge_list(include_str!("../fixtures/fig1.edges")).unwrap();
    let blocks = two_edge_biconnected_blocks(&g).unwrap();
    print!("{}", export_dot(&g, Some(&blocks)));
}
