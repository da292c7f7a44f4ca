//! Strongly biconnected components: maximal vertex sets whose induced
//! subgraph is strongly biconnected.
//!
//! [`strongly_biconnected_components`] refines the vertex set by alternating
//! two splits until every part is strongly biconnected: an SCC split (a
//! strongly biconnected set lies inside one SCC) and an undirected-block split
//! of the underlying graph (its underlying graph is biconnected, so it lies
//! inside one block). Every strongly biconnected set therefore stays inside
//! some part throughout, and the maximal emitted parts are exactly the
//! components. [`sbc_oracle`] enumerates vertex subsets directly and is kept
//! for cross-checking.

use std::collections::HashSet;

use crate::connectivity::{
    is_strongly_biconnected, strongly_connected_components, undirected_blocks,
};
use crate::family::{canonical_sort, retain_maximal};
use crate::graph::{Digraph, VertexId, VertexSet};
use crate::AnalysisError;

/// Cover of `V` by strongly biconnected components. Singletons are kept for
/// vertices that belong to no larger component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SbcDecomposition {
    components: Vec<VertexSet>,
    membership: Vec<Vec<usize>>,
}

impl SbcDecomposition {
    fn from_components(n: usize, mut components: Vec<VertexSet>) -> Self {
        retain_maximal(&mut components);
        canonical_sort(&mut components);
        let mut membership = vec![Vec::new(); n];
        for (i, c) in components.iter().enumerate() {
            for v in c {
                membership[v].push(i);
            }
        }
        Self {
            components,
            membership,
        }
    }

    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn vertex_count(&self) -> usize {
        self.membership.len()
    }

    /// Ids (indices into [`components`](Self::components)) of the
    /// components containing `v`.
    pub fn components_of(&self, v: VertexId) -> &[usize] {
        &self.membership[v]
    }

    /// Whether some component contains both `x` and `y`; reflexive.
    pub fn same_sbc(&self, x: VertexId, y: VertexId) -> bool {
        if x == y {
            return true;
        }
        let (a, b) = (&self.membership[x], &self.membership[y]);
        a.iter().any(|c| b.contains(c))
    }

    /// Components with at least two vertices.
    pub fn nontrivial(&self) -> impl Iterator<Item = &VertexSet> {
        self.components.iter().filter(|c| c.len() > 1)
    }

    /// Largest intersection of two distinct components.
    pub fn max_overlap(&self) -> usize {
        let mut best = 0;
        for (i, a) in self.components.iter().enumerate() {
            for b in &self.components[i + 1..] {
                best = best.max(a.intersection_len(b));
            }
        }
        best
    }
}

/// Refinement algorithm; `g` need not be strongly connected.
pub fn strongly_biconnected_components(g: &Digraph) -> SbcDecomposition {
    let mut work: Vec<VertexSet> = strongly_connected_components(g).into_classes();
    work.reverse();
    let mut seen: HashSet<VertexSet> = work.iter().cloned().collect();
    let mut emitted = Vec::new();

    while let Some(set) = work.pop() {
        if set.len() <= 1 {
            emitted.push(set);
            continue;
        }
        let sub = g
            .induced_subgraph(&set)
            .expect("worklist sets are in range");
        if is_strongly_biconnected(&sub.graph) {
            emitted.push(set);
            continue;
        }
        let mut parts = Vec::new();
        for block in undirected_blocks(&sub.graph.underlying()).blocks {
            let inner = sub
                .graph
                .induced_subgraph(&block)
                .expect("block of subgraph");
            for class in strongly_connected_components(&inner.graph).into_classes() {
                parts.push(class.map(|v| sub.original(inner.original(v))));
            }
        }
        canonical_sort(&mut parts);
        for part in parts.into_iter().rev() {
            if seen.insert(part.clone()) {
                work.push(part);
            }
        }
    }
    SbcDecomposition::from_components(g.vertex_count(), emitted)
}

/// Subset enumeration straight from the definition; `n` must not exceed
/// `guard` (and at most 63).
pub fn sbc_oracle(g: &Digraph, guard: usize) -> Result<SbcDecomposition, AnalysisError> {
    let n = g.vertex_count();
    if n > guard.min(63) {
        return Err(AnalysisError::GuardExceeded { size: n, guard });
    }
    let mut masks: Vec<u64> = (1u64..1u64 << n).collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut kept: Vec<u64> = Vec::new();
    for mask in masks {
        if kept.iter().any(|&k| k & mask == mask) {
            continue;
        }
        let sub = g.induced_by_mask(|v| mask >> v & 1 == 1);
        if is_strongly_biconnected(&sub.graph) {
            kept.push(mask);
        }
    }
    let components = kept
        .into_iter()
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    Ok(SbcDecomposition::from_components(n, components))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Edge;

    fn comps(d: &SbcDecomposition) -> Vec<Vec<usize>> {
        d.components()
            .iter()
            .map(|c| c.as_slice().to_vec())
            .collect()
    }

    fn two_triangles() -> Digraph {
        Digraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    #[test]
    fn strongly_biconnected_graph_is_one_component() {
        let k4 = Digraph::new(
            4,
            (0..4).flat_map(|a| (0..4).filter(move |&b| b != a).map(move |b| (a, b))),
        )
        .unwrap();
        assert_eq!(
            comps(&strongly_biconnected_components(&k4)),
            vec![vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        // expected values from the subset-enumeration oracle
        let g = two_triangles();
        let d = strongly_biconnected_components(&g);
        assert_eq!(comps(&d), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(comps(&sbc_oracle(&g, 12).unwrap()), comps(&d));
        assert!(!d.same_sbc(0, 3));
        assert!(d.same_sbc(0, 2));
        assert!(d.same_sbc(3, 3));
        assert_eq!(d.max_overlap(), 1);
    }

    #[test]
    fn arc_gives_singletons() {
        let g = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(
            comps(&strongly_biconnected_components(&g)),
            vec![vec![0], vec![1]]
        );
        assert_eq!(comps(&sbc_oracle(&g, 12).unwrap()), vec![vec![0], vec![1]]);
    }

    #[test]
    fn cycle_oracle() {
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(comps(&sbc_oracle(&c3, 12).unwrap()), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn oracle_guard() {
        let g = Digraph::new(13, Vec::<Edge>::new()).unwrap();
        assert_eq!(
            sbc_oracle(&g, 12),
            Err(AnalysisError::GuardExceeded {
                size: 13,
                guard: 12
            })
        );
    }

    #[test]
    fn strongly_connected_but_not_biconnected_splits() {
        // two directed 4-cycles joined at vertex 0 by an extra cut through a path
        let g = Digraph::new(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (5, 6),
                (6, 0),
            ],
        )
        .unwrap();
        let d = strongly_biconnected_components(&g);
        assert_eq!(comps(&d), vec![vec![0, 1, 2, 3], vec![0, 4, 5, 6]]);
        assert_eq!(comps(&sbc_oracle(&g, 12).unwrap()), comps(&d));
    }

    #[test]
    fn antiparallel_pair_inside_arc_chain() {
        // 0 <-> 1 -> 2, 2 has no way back: {0,1} and {2}
        let g = Digraph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(
            comps(&strongly_biconnected_components(&g)),
            vec![vec![0, 1], vec![2]]
        );
    }
}
