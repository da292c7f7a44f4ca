mod common;

use std::collections::VecDeque;

use proptest::prelude::*;
use sbgraph::connectivity::*;
use sbgraph::io::{gen_random_sb, parse_edge_list, write_edge_list};
use sbgraph::sbc::{sbc_oracle, strongly_biconnected_components};
use sbgraph::{Digraph, Edge, UndirectedGraph, VertexSet};

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1)).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)));
            let edges: Vec<(usize, usize)> = pairs
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Digraph::new(n, edges).unwrap()
        })
    })
}

fn undirected(max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            UndirectedGraph::new(n, pairs.zip(bits).filter_map(|(e, keep)| keep.then_some(e)))
        })
    })
}

fn reachable(g: &Digraph, from: usize) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        for &w in g.out_neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

fn component_count(u: &UndirectedGraph, skip: Option<usize>) -> usize {
    let n = u.vertex_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in (0..n).filter(|&s| Some(s) != skip) {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in u.neighbors(v) {
                if Some(w) != skip && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn remove_edge_drops_exactly_one_arc(g in digraph(7), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let e = g.edges()[pick.index(g.edge_count())];
        let h = g.remove_edge(e).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count() - 1);
        prop_assert_eq!(h.vertex_count(), g.vertex_count());
        prop_assert!(!h.has_edge(e.tail, e.head));

        let same_underlying = h.underlying() == g.underlying();
        prop_assert_eq!(same_underlying, g.has_edge(e.head, e.tail));
    }

    #[test]
    fn induced_on_all_vertices_is_identity(g in digraph(7)) {
        let all: VertexSet = g.vertices().collect();
        let sub = g.induced_subgraph(&all).unwrap();
        prop_assert_eq!(&sub.graph, &g);
        prop_assert_eq!(sub.to_original, g.vertices().collect::<Vec<_>>());
    }

    #[test]
    fn rebuild_and_text_round_trip(g in digraph(7)) {
        prop_assert_eq!(&Digraph::new(g.vertex_count(), g.edges().to_vec()).unwrap(), &g);
        prop_assert_eq!(&parse_edge_list(&write_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn scc_matches_mutual_reachability(g in digraph(7), seed in any::<u64>()) {
        let p = strongly_connected_components(&g);
        let class = p.class_of(g.vertex_count());
        let reach: Vec<Vec<bool>> = g.vertices().map(|v| reachable(&g, v)).collect();
        for x in g.vertices() {
            for y in g.vertices() {
                prop_assert_eq!(class[x] == class[y], reach[x][y] && reach[y][x]);
            }
        }
        prop_assert_eq!(strongly_connected_components(&common::shuffled(&g, seed)), p);
    }

    #[test]
    fn undirected_block_invariants(u in undirected(7)) {
        let d = undirected_blocks(&u);
        for (i, a) in d.blocks.iter().enumerate() {
            for b in &d.blocks[i + 1..] {
                prop_assert!(a.intersection_len(b) <= 1);
            }
        }
        for &(a, b) in u.edges() {
            let holders = d.blocks.iter().filter(|blk| blk.contains(a) && blk.contains(b)).count();
            prop_assert_eq!(holders, 1);
            let pair = VertexSet::from([a, b]);
            prop_assert_eq!(d.bridges.contains(&(a, b)), d.blocks.contains(&pair));
        }
        let base = component_count(&u, None);
        for v in 0..u.vertex_count() {
            let cut = component_count(&u, Some(v)) > base;
            prop_assert_eq!(d.articulation_points.contains(v), cut);
        }
        if base == 1 && u.vertex_count() >= 3 {
            prop_assert_eq!(is_biconnected(&u), d.blocks.len() == 1);
        }
    }

    #[test]
    fn sbc_refinement_matches_oracle_on_any_graph(g in digraph(7)) {
        let fast = strongly_biconnected_components(&g);
        prop_assert_eq!(&fast, &sbc_oracle(&g, 12).unwrap());
        for c in fast.components() {
            let sub = g.induced_subgraph(c).unwrap();
            prop_assert!(is_strongly_biconnected(&sub.graph));
        }
        for v in g.vertices() {
            prop_assert!(!fast.components_of(v).is_empty());
            for w in g.vertices() {
                prop_assert_eq!(fast.same_sbc(v, w), fast.same_sbc(w, v));
            }
        }
        prop_assert!(fast.max_overlap() <= 1);
    }

    #[test]
    fn generated_graphs_are_reproducible(n in 3usize..9, seed in any::<u64>()) {
        let a = gen_random_sb(n, 0.6, seed).unwrap();
        prop_assert!(is_strongly_biconnected(&a));
        prop_assert_eq!(write_edge_list(&a), write_edge_list(&gen_random_sb(n, 0.6, seed).unwrap()));
    }
}

/// At least 500 strongly connected graphs with `n <= 8`, refinement against
/// subset enumeration.
#[test]
fn sbc_refinement_matches_oracle_on_strongly_connected_sweep() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 500 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.25..0.7);
        let edges: Vec<Edge> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b)
            .filter(|_| rng.gen_bool(p))
            .map(Edge::from)
            .collect();
        let g = Digraph::new(n, edges).unwrap();
        if !is_strongly_connected(&g) {
            continue;
        }
        checked += 1;
        assert_eq!(
            strongly_biconnected_components(&g),
            sbc_oracle(&g, 12).unwrap(),
            "graph:\n{}",
            write_edge_list(&g)
        );
    }
}
