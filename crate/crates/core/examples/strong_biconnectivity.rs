//! Strong connectivity, biconnectivity of the underlying graph, and the
//! strongly biconnected components of a small digraph.
//!
//! cargo run --example strong_biconnectivity

use sbgraph::connectivity::{
    is_biconnected, is_strongly_biconnected, is_strongly_connected, strongly_connected_components,
};
use sbgraph::sbc::strongly_biconnected_components;
use sbgraph::Digraph;

fn main() {
    // two directed triangles glued at vertex 2, plus a tail 5 -> 0
    let g = Digraph::new(
        6,
        [
            (0, 1),
            (1, 2),
            (2, 0),
            (2, 3),
            (3, 4),
            (4, 2),
            (5, 0),
            (0, 5),
        ],
    )
    .unwrap();

    println!("strongly connected:     {}", is_strongly_connected(&g));
    println!(
        "underlying biconnected: {}",
        is_biconnected(&g.underlying())
    );
    println!("strongly biconnected:   {}", is_strongly_biconnected(&g));
    println!("sccs: {}", strongly_connected_components(&g).len());

    let d = strongly_biconnected_components(&g);
    for c in d.components() {
        println!("sbc {c}");
    }
    println!("0 and 3 share an sbc: {}", d.same_sbc(0, 3));
}
