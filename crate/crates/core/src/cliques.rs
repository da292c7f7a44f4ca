//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting) over a
//! symmetric relation given as bit rows.

use crate::bitset::{BitMatrix, BitRow};
use crate::graph::VertexSet;

/// All maximal cliques of the graph whose adjacency is `adj` (diagonal
/// ignored). Isolated vertices yield singleton cliques.
pub fn maximal_cliques(adj: &BitMatrix) -> Vec<VertexSet> {
    let n = adj.dim();
    let nbrs: Vec<BitRow> = (0..n)
        .map(|v| {
            let mut row = adj.row(v).clone();
            row.clear(v);
            row
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    expand(
        &nbrs,
        &mut current,
        BitRow::ones(n),
        BitRow::zeros(n),
        &mut out,
    );
    out
}

fn expand(
    nbrs: &[BitRow],
    current: &mut Vec<usize>,
    mut candidates: BitRow,
    mut excluded: BitRow,
    out: &mut Vec<VertexSet>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() && !current.is_empty() {
            out.push(current.iter().copied().collect());
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&u| {
            (
                nbrs[u].intersection_count(&candidates),
                std::cmp::Reverse(u),
            )
        })
        .expect("non-empty candidate set");
    let branch: Vec<usize> = candidates.and_not(&nbrs[pivot]).iter().collect();
    for v in branch {
        current.push(v);
        expand(
            nbrs,
            current,
            candidates.and(&nbrs[v]),
            excluded.and(&nbrs[v]),
            out,
        );
        current.pop();
        candidates.clear(v);
        excluded.set(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::canonical_sort;

    fn matrix(n: usize, edges: &[(usize, usize)]) -> BitMatrix {
        let mut m = BitMatrix::filled(n, false);
        for &(a, b) in edges {
            m.set(a, b, true);
            m.set(b, a, true);
        }
        m
    }

    fn sorted(mut c: Vec<VertexSet>) -> Vec<Vec<usize>> {
        canonical_sort(&mut c);
        c.into_iter().map(VertexSet::into_vec).collect()
    }

    #[test]
    fn triangle_with_tail() {
        let m = matrix(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_eq!(sorted(maximal_cliques(&m)), vec![vec![0, 1, 2], vec![2, 3]]);
    }

    #[test]
    fn empty_relation_gives_singletons() {
        let m = matrix(3, &[]);
        assert_eq!(sorted(maximal_cliques(&m)), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn four_cycle_has_four_edge_cliques() {
        let m = matrix(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(
            sorted(maximal_cliques(&m)),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
    }

    #[test]
    fn matches_subset_enumeration() {
        // deterministic pseudo-random graphs on 9 vertices
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..40 {
            let n = 9;
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state & 1 == 0 {
                        edges.push((a, b));
                    }
                }
            }
            let m = matrix(n, &edges);
            let is_clique = |mask: u32| {
                (0..n).all(|a| {
                    (a + 1..n).all(|b| mask >> a & 1 == 0 || mask >> b & 1 == 0 || m.get(a, b))
                })
            };
            let cliques: Vec<u32> = (1u32..1 << n).filter(|&s| is_clique(s)).collect();
            let brute: Vec<VertexSet> = cliques
                .iter()
                .filter(|&&s| !cliques.iter().any(|&t| t != s && t & s == s))
                .map(|&s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
                .collect();
            assert_eq!(sorted(maximal_cliques(&m)), sorted(brute));
        }
    }
}
