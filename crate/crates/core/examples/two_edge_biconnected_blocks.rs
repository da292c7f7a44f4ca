//! 2-edge-biconnected blocks of the 16-vertex fixture, checked against the
//! clique oracle, next to the coarser 2-edge blocks.
//!
//! cargo run --example two_edge_biconnected_blocks

use sbgraph::blocks::{
    edge_relation, oracle_two_edge_biconnected_blocks, two_edge_biconnected_blocks, two_edge_blocks,
};
use sbgraph::io::parse_edge_list;
use sbgraph::resilience::components_2esb;
use sbgraph::{DEFAULT_CLIQUE_GUARD, DEFAULT_ENUMERATION_GUARD};

fn main() {
    let g = parse_edge_list(include_str!("../fixtures/fig1.edges")).unwrap();

    let blocks = two_edge_biconnected_blocks(&g).unwrap();
    assert_eq!(
        blocks,
        oracle_two_edge_biconnected_blocks(&g, DEFAULT_CLIQUE_GUARD).unwrap()
    );
    // labels are 0-based; add one to get the drawn labels
    for b in &blocks {
        println!("2eb block {b}");
    }

    let l = edge_relation(&g).unwrap();
    println!("3 and 14 related:  {}", l.get(3, 14) && l.get(14, 3));
    println!("14 and 11 related: {}", l.get(14, 11) && l.get(11, 14));

    for b in &two_edge_blocks(&g).unwrap() {
        println!("2e block  {b}");
    }
    for c in &components_2esb(&g, DEFAULT_ENUMERATION_GUARD).unwrap() {
        println!("2esb component {c}");
    }
}
