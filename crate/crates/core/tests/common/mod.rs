#![allow(dead_code)]

use sbgraph::io::parse_edge_list;
use sbgraph::{Digraph, Edge, VertexSet};

pub const FIG1: &str = include_str!("../../fixtures/fig1.edges");
pub const FIG2: &str = include_str!("../../fixtures/fig2.edges");

pub fn fig1() -> Digraph {
    parse_edge_list(FIG1).unwrap()
}

pub fn fig2() -> Digraph {
    parse_edge_list(FIG2).unwrap()
}

/// Fixture files store drawn vertex `k` as `k - 1`.
pub fn drawn(labels: &[usize]) -> VertexSet {
    labels.iter().map(|&k| k - 1).collect()
}

pub fn drawn_edge(tail: usize, head: usize) -> Edge {
    Edge::new(tail - 1, head - 1)
}

pub fn c3() -> Digraph {
    Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
}

pub fn bidirected_complete(n: usize) -> Digraph {
    Digraph::new(
        n,
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))),
    )
    .unwrap()
}

pub fn bidirected(n: usize, pairs: &[(usize, usize)]) -> Digraph {
    Digraph::new(n, pairs.iter().flat_map(|&(a, b)| [(a, b), (b, a)])).unwrap()
}

pub fn shuffled(g: &Digraph, seed: u64) -> Digraph {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut edges = g.edges().to_vec();
    edges.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    Digraph::new(g.vertex_count(), edges).unwrap()
}

/// Corpus used by the oracle and invariant sweeps: `count` seeded strongly
/// biconnected graphs with 3..=8 vertices.
pub fn sweep_corpus(count: usize, seed: u64) -> Vec<Digraph> {
    (0..count)
        .map(|i| {
            let (n, p) = sbgraph::io::oracle::sweep_parameters(i, 3, 8);
            sbgraph::io::gen_random_sb(n, p, seed + i as u64).unwrap()
        })
        .collect()
}
