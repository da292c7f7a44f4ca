//! Vertex-deletion blocks on the 20-vertex fixture, where two blocks share
//! two vertices.
//!
//! cargo run --example two_strong_biconnected_blocks

use sbgraph::blocks::{two_strong_biconnected_blocks, two_strong_blocks};
use sbgraph::io::parse_edge_list;
use sbgraph::resilience::b_articulation_points;

fn main() {
    let g = parse_edge_list(include_str!("../fixtures/fig2.edges")).unwrap();

    let sb = two_strong_biconnected_blocks(&g).unwrap();
    for b in &sb {
        println!("2sb block {b}");
    }
    println!("largest overlap: {}", sb.max_pairwise_overlap());

    let s = two_strong_blocks(&g).unwrap();
    for b in &s {
        println!("2s block  {b}");
    }
    println!(
        "b-articulation points: {}",
        b_articulation_points(&g).unwrap()
    );
    println!(
        "1 and 5 together: 2s {}, 2sb {}",
        s.together(1, 5),
        sb.together(1, 5)
    );
}
