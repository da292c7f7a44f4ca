//! Seeded generators and a small scaling run.
//!
//! cargo run --release --example random_graphs

use sbgraph::blocks::two_edge_biconnected_blocks;
use sbgraph::io::{bench, gen_hamiltonian_sb, gen_random_sb, write_edge_list};
use sbgraph::Execution;

fn main() {
    let g = gen_random_sb(6, 0.5, 7).unwrap();
    print!("{}", write_edge_list(&g));
    println!(
        "blocks: {:?}",
        two_edge_biconnected_blocks(&g).unwrap().to_vecs()
    );

    let sparse = gen_hamiltonian_sb(40, 100, 7).unwrap();
    println!(
        "sparse: n={} m={} blocks={}",
        sparse.vertex_count(),
        sparse.edge_count(),
        two_edge_biconnected_blocks(&sparse).unwrap().len()
    );

    let points = bench::scaling(&[50, 100, 200], 4, 1, 3, Execution::Serial).unwrap();
    for p in &points {
        println!("n={:<4} m={:<4} {:?}", p.n, p.m, p.best);
    }
    println!("growth vs cubic: {:?}", bench::cubic_growth_ratios(&points));
}
