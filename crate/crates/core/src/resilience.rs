//! Single-failure analysis of strongly biconnected digraphs.
//!
//! A *b-bridge* is an arc whose removal leaves a graph that is not strongly
//! biconnected; a *b-articulation point* is the vertex analogue. Both are
//! found by deleting each element and rechecking, which is the definition
//! itself and costs `O(m(n+m))` and `O(n(n+m))`.

use crate::connectivity::{is_strongly_biconnected, strongly_connected_components};
use crate::family::{retain_maximal, BlockFamily};
use crate::graph::{Digraph, Edge, VertexSet};
use crate::{require_strongly_biconnected, AnalysisError, Execution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub b_bridges: Vec<Edge>,
    pub b_articulation_points: VertexSet,
}

pub fn cut_report(g: &Digraph, exec: Execution) -> Result<CutReport, AnalysisError> {
    Ok(CutReport {
        b_bridges: b_bridges_with(g, exec)?,
        b_articulation_points: b_articulation_points_with(g, exec)?,
    })
}

pub fn b_bridges(g: &Digraph) -> Result<Vec<Edge>, AnalysisError> {
    b_bridges_with(g, Execution::Serial)
}

/// b-bridges sorted by `(tail, head)`.
pub fn b_bridges_with(g: &Digraph, exec: Execution) -> Result<Vec<Edge>, AnalysisError> {
    require_strongly_biconnected(g)?;
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    let breaks = exec.map(&edges, |&e| breaks_on_edge(g, e));
    Ok(edges
        .into_iter()
        .zip(breaks)
        .filter_map(|(e, b)| b.then_some(e))
        .collect())
}

fn breaks_on_edge(g: &Digraph, e: Edge) -> bool {
    !is_strongly_biconnected(&g.remove_edge(e).expect("edge taken from the graph"))
}

pub fn b_articulation_points(g: &Digraph) -> Result<VertexSet, AnalysisError> {
    b_articulation_points_with(g, Execution::Serial)
}

pub fn b_articulation_points_with(
    g: &Digraph,
    exec: Execution,
) -> Result<VertexSet, AnalysisError> {
    require_strongly_biconnected(g)?;
    let vertices: Vec<usize> = g.vertices().collect();
    let breaks = exec.map(&vertices, |&w| {
        !is_strongly_biconnected(&g.remove_vertex(w).expect("vertex in range").graph)
    });
    Ok(vertices
        .into_iter()
        .zip(breaks)
        .filter_map(|(v, b)| b.then_some(v))
        .collect())
}

/// More than two vertices, strongly biconnected, and no b-bridges.
pub fn is_2_edge_strongly_biconnected(g: &Digraph) -> bool {
    g.vertex_count() > 2
        && is_strongly_biconnected(g)
        && !g.edges().iter().any(|&e| breaks_on_edge(g, e))
}

/// More than two vertices, strongly biconnected, and no b-articulation points.
pub fn is_2_vertex_strongly_biconnected(g: &Digraph) -> bool {
    g.vertex_count() > 2
        && is_strongly_biconnected(g)
        && !g
            .vertices()
            .any(|w| !is_strongly_biconnected(&g.remove_vertex(w).expect("vertex in range").graph))
}

/// Maximal vertex subsets inducing 2-edge-strongly-biconnected subgraphs.
pub fn components_2esb(g: &Digraph, guard: usize) -> Result<BlockFamily, AnalysisError> {
    maximal_subsets(g, guard, is_2_edge_strongly_biconnected)
}

/// Maximal vertex subsets inducing 2-vertex-strongly-biconnected subgraphs.
pub fn components_2vsb(g: &Digraph, guard: usize) -> Result<BlockFamily, AnalysisError> {
    maximal_subsets(g, guard, is_2_vertex_strongly_biconnected)
}

/// Vertices of the largest subset in which every vertex keeps in- and
/// out-degree at least two.
fn degree_two_core(g: &Digraph) -> VertexSet {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut out_deg: Vec<usize> = g.vertices().map(|v| g.out_neighbors(v).len()).collect();
    let mut in_deg: Vec<usize> = g.vertices().map(|v| g.in_neighbors(v).len()).collect();
    let mut queue: Vec<usize> = g
        .vertices()
        .filter(|&v| out_deg[v] < 2 || in_deg[v] < 2)
        .collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.out_neighbors(v) {
            in_deg[w] -= 1;
            if alive[w] && in_deg[w] < 2 {
                queue.push(w);
            }
        }
        for &w in g.in_neighbors(v) {
            out_deg[w] -= 1;
            if alive[w] && out_deg[w] < 2 {
                queue.push(w);
            }
        }
    }
    g.vertices().filter(|&v| alive[v]).collect()
}

/// Enumerates subsets of size >= 3 satisfying `accept`, keeping maximal ones.
///
/// Both predicates force in/out-degree >= 2 inside the subset (a vertex with a
/// single out-arc loses strong connectivity when that arc, or its head, is
/// deleted) and strong connectivity, so the search is confined to the SCCs of
/// the degree-two core. `guard` bounds the size of each such region.
fn maximal_subsets(
    g: &Digraph,
    guard: usize,
    accept: fn(&Digraph) -> bool,
) -> Result<BlockFamily, AnalysisError> {
    let core = g
        .induced_subgraph(&degree_two_core(g))
        .expect("core within range");
    let mut found = Vec::new();
    for region in strongly_connected_components(&core.graph).into_classes() {
        let r = region.len();
        if r < 3 {
            continue;
        }
        if r > guard.min(63) {
            return Err(AnalysisError::GuardExceeded { size: r, guard });
        }
        let members: Vec<usize> = region.iter().map(|v| core.original(v)).collect();
        let region_graph = g
            .induced_subgraph(&members.iter().copied().collect())
            .expect("region");
        let h = &region_graph.graph;
        let out_masks: Vec<u64> = h
            .vertices()
            .map(|v| h.out_neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
            .collect();
        let in_masks: Vec<u64> = h
            .vertices()
            .map(|v| h.in_neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
            .collect();

        let mut masks: Vec<u64> = (1u64..1u64 << r).filter(|m| m.count_ones() >= 3).collect();
        masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut kept: Vec<u64> = Vec::new();
        for mask in masks {
            if kept.iter().any(|&k| k & mask == mask) {
                continue;
            }
            let degrees_ok = (0..r).filter(|&v| mask >> v & 1 == 1).all(|v| {
                (out_masks[v] & mask).count_ones() >= 2 && (in_masks[v] & mask).count_ones() >= 2
            });
            if degrees_ok && accept(&h.induced_by_mask(|v| mask >> v & 1 == 1).graph) {
                kept.push(mask);
            }
        }
        found.extend(kept.into_iter().map(|m| {
            (0..r)
                .filter(|&v| m >> v & 1 == 1)
                .map(|v| region_graph.original(v))
                .collect::<VertexSet>()
        }));
    }
    retain_maximal(&mut found);
    Ok(BlockFamily::new(found))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn bidirected(n: usize, pairs: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, pairs.iter().flat_map(|&(a, b)| [(a, b), (b, a)])).unwrap()
    }

    fn k4() -> Digraph {
        bidirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn cycle_is_fragile() {
        let g = c3();
        assert_eq!(b_bridges(&g).unwrap(), g.edges().to_vec());
        assert_eq!(b_articulation_points(&g).unwrap().as_slice(), &[0, 1, 2]);
        assert!(!is_2_edge_strongly_biconnected(&g));
        assert!(!is_2_vertex_strongly_biconnected(&g));
        assert!(components_2esb(&g, 12).unwrap().is_empty());
        assert!(components_2vsb(&g, 12).unwrap().is_empty());
    }

    #[test]
    fn bidirected_k4_is_robust() {
        let g = k4();
        assert!(b_bridges(&g).unwrap().is_empty());
        assert!(b_articulation_points(&g).unwrap().is_empty());
        assert!(is_2_edge_strongly_biconnected(&g));
        assert!(is_2_vertex_strongly_biconnected(&g));
        assert_eq!(
            components_2esb(&g, 12).unwrap().to_vecs(),
            vec![vec![0, 1, 2, 3]]
        );
        assert_eq!(
            components_2vsb(&g, 12).unwrap().to_vecs(),
            vec![vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn directed_four_cycle() {
        let g = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_2_vertex_strongly_biconnected(&g));
        assert_eq!(b_articulation_points(&g).unwrap().len(), 4);
    }

    #[test]
    fn triangles_sharing_a_vertex_have_no_2vsb_component() {
        let g = Digraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(components_2vsb(&g, 12).unwrap().is_empty());
        assert!(components_2esb(&g, 12).unwrap().is_empty());
    }

    #[test]
    fn preconditions() {
        let arc = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(b_bridges(&arc), Err(AnalysisError::NotStronglyBiconnected));
        assert_eq!(
            b_articulation_points(&arc),
            Err(AnalysisError::NotStronglyBiconnected)
        );
    }

    #[test]
    fn guard_applies_to_candidate_region() {
        let n = 14;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let g = bidirected(n, &pairs);
        assert_eq!(
            components_2esb(&g, 12),
            Err(AnalysisError::GuardExceeded {
                size: 14,
                guard: 12
            })
        );
    }

    #[test]
    fn strong_bridges_are_b_bridges() {
        // K4 with one pendant directed triangle through vertex 0
        let mut edges: Vec<(usize, usize)> =
            k4().edges().iter().map(|e| (e.tail, e.head)).collect();
        edges.extend([(0, 4), (4, 5), (5, 0)]);
        let g = Digraph::new(6, edges).unwrap();
        assert!(!is_strongly_biconnected(&g));
        let with_extra = {
            let mut e: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.tail, e.head)).collect();
            e.push((5, 1));
            Digraph::new(6, e).unwrap()
        };
        assert!(is_strongly_biconnected(&with_extra));
        let bb = b_bridges(&with_extra).unwrap();
        for &e in with_extra.edges() {
            let h = with_extra.remove_edge(e).unwrap();
            if !crate::connectivity::is_strongly_connected(&h) {
                assert!(bb.contains(&e), "strong bridge {e} missing");
            }
        }
    }

    #[test]
    fn degree_core_prunes_pendant_paths() {
        let mut edges: Vec<(usize, usize)> =
            k4().edges().iter().map(|e| (e.tail, e.head)).collect();
        edges.extend([(3, 4), (4, 0)]);
        let g = Digraph::new(5, edges).unwrap();
        assert_eq!(degree_two_core(&g).as_slice(), &[0, 1, 2, 3]);
    }
}
