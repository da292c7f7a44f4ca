//! Arcs and vertices whose removal destroys strong biconnectivity.
//!
//! cargo run --example b_bridges

use sbgraph::resilience::{
    b_articulation_points, b_bridges, cut_report, is_2_edge_strongly_biconnected,
};
use sbgraph::{Digraph, Execution};

fn main() {
    // directed 5-cycle with a bidirected chord 0 <-> 2
    let g = Digraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (2, 0)]).unwrap();

    let bb = b_bridges(&g).unwrap();
    println!("{} of {} arcs are b-bridges", bb.len(), g.edge_count());
    for e in &bb {
        println!("  b-bridge {e}");
    }
    println!(
        "b-articulation points: {}",
        b_articulation_points(&g).unwrap()
    );
    println!(
        "2-edge-strongly biconnected: {}",
        is_2_edge_strongly_biconnected(&g)
    );

    let report = cut_report(&g, Execution::Parallel).unwrap();
    println!("parallel cut report agrees: {}", report.b_bridges == bb);
}
