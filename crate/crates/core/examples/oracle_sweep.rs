//! Compares the fast SBC and block computations with brute-force oracles on
//! seeded random graphs.
//!
//! cargo run --release --example oracle_sweep -- 2000 42

use sbgraph::io::{oracle_sweep, write_edge_list};

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().map_or(500, |s| s.parse().expect("count"));
    let seed = args.next().map_or(1, |s| s.parse().expect("seed"));

    let summary = oracle_sweep(count, seed, 3, 8).unwrap();
    println!(
        "checked {} graphs, {} mismatches",
        summary.graphs,
        summary.mismatches.len()
    );
    for (seed, m) in &summary.mismatches {
        println!("seed {seed}: {:?}\n{}", m.kind, write_edge_list(&m.witness));
    }
}
