//! Strongly connected components, undirected blocks (biconnected
//! components) and the strongly-biconnected predicate. All traversals use an
//! explicit stack.

use crate::family::canonical_sort;
use crate::graph::{Digraph, UndirectedGraph, VertexId, VertexSet};

const UNSET: usize = usize::MAX;

/// Disjoint vertex classes covering `V`, each sorted, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<VertexSet>,
}

impl Partition {
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index per vertex.
    pub fn class_of(&self, n: usize) -> Vec<usize> {
        let mut of = vec![UNSET; n];
        for (i, c) in self.classes.iter().enumerate() {
            for v in c {
                of[v] = i;
            }
        }
        of
    }

    pub fn into_classes(self) -> Vec<VertexSet> {
        self.classes
    }
}

/// Tarjan's algorithm with an explicit call stack.
pub fn strongly_connected_components(g: &Digraph) -> Partition {
    let n = g.vertex_count();
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut frames: Vec<(VertexId, usize)> = Vec::new();
    let mut next_index = 0;
    let mut classes = Vec::new();

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, 0));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            let succ = g.out_neighbors(v);
            if frame.1 < succ.len() {
                let w = succ[frame.1];
                frame.1 += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                classes.push(members.into_iter().collect::<VertexSet>());
            }
        }
    }
    canonical_sort(&mut classes);
    Partition { classes }
}

/// `n <= 1` counts as strongly connected.
pub fn is_strongly_connected(g: &Digraph) -> bool {
    g.vertex_count() <= 1 || strongly_connected_components(g).len() == 1
}

/// Blocks, cut vertices and bridges of an undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Biconnected components as vertex sets; isolated vertices appear as
    /// singletons and each bridge as a 2-vertex block.
    pub blocks: Vec<VertexSet>,
    pub articulation_points: VertexSet,
    /// Bridges as `(min, max)` pairs, sorted.
    pub bridges: Vec<(VertexId, VertexId)>,
}

/// Hopcroft–Tarjan lowpoint DFS with an edge stack.
pub fn undirected_blocks(u: &UndirectedGraph) -> BlockDecomposition {
    let n = u.vertex_count();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut bridges = Vec::new();
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    // (vertex, parent, next neighbor position)
    let mut frames: Vec<(VertexId, VertexId, usize)> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if u.neighbors(root).is_empty() {
            blocks.push(VertexSet::from([root]));
            continue;
        }
        let mut root_children = 0;
        frames.push((root, UNSET, 0));

        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            let nbrs = u.neighbors(v);
            if frame.2 < nbrs.len() {
                let w = nbrs[frame.2];
                frame.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == UNSET {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    frames.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == UNSET {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut members = Vec::new();
                let mut edge_count = 0;
                while let Some((a, b)) = edge_stack.pop() {
                    members.push(a);
                    members.push(b);
                    edge_count += 1;
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                if edge_count == 1 {
                    bridges.push((parent.min(v), parent.max(v)));
                }
                blocks.push(members.into_iter().collect::<VertexSet>());
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    canonical_sort(&mut blocks);
    bridges.sort_unstable();
    BlockDecomposition {
        blocks,
        articulation_points: (0..n).filter(|&v| is_cut[v]).collect(),
        bridges,
    }
}

/// Connected with no cut vertex. `K1` and `K2` are biconnected; the empty
/// graph is too.
pub fn is_biconnected(u: &UndirectedGraph) -> bool {
    let n = u.vertex_count();
    if n <= 1 {
        return true;
    }
    let d = undirected_blocks(u);
    d.blocks.len() == 1 && d.blocks[0].len() == n
}

/// Strongly connected with a biconnected underlying graph.
pub fn is_strongly_biconnected(g: &Digraph) -> bool {
    is_strongly_connected(g) && is_biconnected(&g.underlying())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn sets(p: &[VertexSet]) -> Vec<Vec<usize>> {
        p.iter().map(|s| s.as_slice().to_vec()).collect()
    }

    #[test]
    fn scc_of_cycle_and_arc() {
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(
            sets(strongly_connected_components(&c3).classes()),
            vec![vec![0, 1, 2]]
        );
        assert!(is_strongly_connected(&c3));

        let arc = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(
            sets(strongly_connected_components(&arc).classes()),
            vec![vec![0], vec![1]]
        );
        assert!(!is_strongly_connected(&arc));
    }

    #[test]
    fn scc_conventions_for_tiny_graphs() {
        assert!(is_strongly_connected(
            &Digraph::new(0, Vec::<Edge>::new()).unwrap()
        ));
        assert!(is_strongly_connected(
            &Digraph::new(1, Vec::<Edge>::new()).unwrap()
        ));
    }

    #[test]
    fn scc_handles_long_paths_without_recursion() {
        let n = 200_000;
        let g = Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        assert!(is_strongly_connected(&g));
        assert!(is_strongly_biconnected(&g));
    }

    #[test]
    fn blocks_of_triangle() {
        let tri = UndirectedGraph::new(3, [(0, 1), (1, 2), (2, 0)]);
        let d = undirected_blocks(&tri);
        assert_eq!(sets(&d.blocks), vec![vec![0, 1, 2]]);
        assert!(d.articulation_points.is_empty());
        assert!(d.bridges.is_empty());
        assert!(is_biconnected(&tri));
    }

    #[test]
    fn blocks_of_path() {
        let path = UndirectedGraph::new(3, [(0, 1), (1, 2)]);
        let d = undirected_blocks(&path);
        assert_eq!(sets(&d.blocks), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(d.articulation_points.as_slice(), &[1]);
        assert_eq!(d.bridges, vec![(0, 1), (1, 2)]);
        assert!(!is_biconnected(&path));
    }

    #[test]
    fn blocks_of_bowtie() {
        let bowtie = UndirectedGraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let d = undirected_blocks(&bowtie);
        assert_eq!(sets(&d.blocks), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(d.articulation_points.as_slice(), &[2]);
        assert!(d.bridges.is_empty());
    }

    #[test]
    fn isolated_vertices_are_singleton_blocks() {
        let u = UndirectedGraph::new(4, [(1, 2)]);
        let d = undirected_blocks(&u);
        assert_eq!(sets(&d.blocks), vec![vec![0], vec![1, 2], vec![3]]);
        assert!(!is_biconnected(&u));
    }

    #[test]
    fn k2_conventions() {
        assert!(is_biconnected(&UndirectedGraph::new(2, [(0, 1)])));
        assert!(!is_biconnected(&UndirectedGraph::new(2, [])));
        let k2 = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert!(is_strongly_biconnected(&k2));
        assert!(!is_strongly_biconnected(
            &Digraph::new(2, [(0, 1)]).unwrap()
        ));
    }

    #[test]
    fn root_articulation_point() {
        // star centered at the DFS root
        let u = UndirectedGraph::new(4, [(0, 1), (0, 2), (0, 3)]);
        let d = undirected_blocks(&u);
        assert_eq!(d.articulation_points.as_slice(), &[0]);
        assert_eq!(d.blocks.len(), 3);
    }
}
