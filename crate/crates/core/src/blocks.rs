//! 2-blocks of directed graphs.
//!
//! Two distinct vertices `x, y` of a strongly biconnected graph are
//! *edge-biconnected-related* when, for every arc `b`, they share a strongly
//! biconnected component of `G \ {b}`. The maximal related sets of size >= 2
//! are the 2-edge-biconnected blocks. Arcs that are not b-bridges leave the
//! graph strongly biconnected, so only b-bridges can separate a pair.
//!
//! [`two_edge_biconnected_blocks`] builds the relation as an `n x n` bit
//! matrix from the b-bridges, turns it into an undirected helper graph and
//! returns the helper graph's blocks of size >= 2.
//! [`oracle_two_edge_biconnected_blocks`] recomputes the relation over every
//! arc and enumerates its maximal cliques instead; the two must agree.
//!
//! The vertex-deletion analogue (2-strong-biconnected blocks) can overlap in
//! two vertices, so it is computed as maximal cliques directly. 2-edge blocks
//! and 2-strong blocks use strongly connected components in place of strongly
//! biconnected ones.

use crate::bitset::{BitMatrix, BitRow};
use crate::cliques::maximal_cliques;
use crate::connectivity::{
    is_strongly_connected, strongly_connected_components, undirected_blocks,
};
use crate::family::BlockFamily;
use crate::graph::{Digraph, Edge, UndirectedGraph, VertexId, VertexSet};
use crate::resilience::b_bridges_with;
use crate::sbc::strongly_biconnected_components;
use crate::{require_strongly_biconnected, AnalysisError, Execution};

/// Boolean `n x n` table; `get(x, y)` is true while no examined deletion has
/// separated `x` from `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationMatrix {
    cells: BitMatrix,
}

impl RelationMatrix {
    pub fn all_true(n: usize) -> Self {
        Self {
            cells: BitMatrix::filled(n, true),
        }
    }

    pub fn dim(&self) -> usize {
        self.cells.dim()
    }

    pub fn get(&self, x: VertexId, y: VertexId) -> bool {
        self.cells.get(x, y)
    }

    pub fn is_symmetric(&self) -> bool {
        self.cells.is_symmetric()
    }

    /// Clears every cell not set in the matching row of `together`.
    fn retain(&mut self, together: &[BitRow]) {
        for (x, row) in together.iter().enumerate() {
            self.cells.row_mut(x).and_assign(row);
        }
    }

    /// Undirected graph joining `x != y` whenever both `L[x,y]` and `L[y,x]` hold.
    pub fn helper_graph(&self) -> UndirectedGraph {
        let n = self.dim();
        let pairs = (0..n).flat_map(|x| {
            self.cells
                .row(x)
                .iter()
                .filter(move |&y| y > x && self.get(y, x))
                .map(move |y| (x, y))
        });
        UndirectedGraph::new(n, pairs)
    }

    fn symmetric_cells(&self) -> BitMatrix {
        let n = self.dim();
        let mut m = BitMatrix::filled(n, false);
        for x in 0..n {
            for y in self.cells.row(x).iter() {
                if self.get(y, x) {
                    m.set(x, y, true);
                }
            }
        }
        m
    }
}

/// Row `x` marks every original vertex sharing a component with `x`.
/// `components` use local ids, translated by `to_original`.
fn together_rows(
    n: usize,
    components: &[VertexSet],
    to_original: impl Fn(VertexId) -> VertexId,
) -> Vec<BitRow> {
    let mut rows = vec![BitRow::zeros(n); n];
    for comp in components {
        let mut comp_row = BitRow::zeros(n);
        for v in comp {
            comp_row.set(to_original(v));
        }
        for v in comp {
            rows[to_original(v)].or_assign(&comp_row);
        }
    }
    rows
}

/// Rows for `G \ {w}`: pairs involving `w` itself are unconstrained.
fn together_rows_without(
    n: usize,
    w: VertexId,
    components: &[VertexSet],
    to_original: &[VertexId],
) -> Vec<BitRow> {
    let mut rows = together_rows(n, components, |v| to_original[v]);
    for row in rows.iter_mut() {
        row.set(w);
    }
    rows[w] = BitRow::ones(n);
    rows
}

fn sbc_rows_without_edge(g: &Digraph, b: Edge) -> Vec<BitRow> {
    let h = g.remove_edge(b).expect("arc of the graph");
    let d = strongly_biconnected_components(&h);
    together_rows(g.vertex_count(), d.components(), |v| v)
}

pub fn edge_relation(g: &Digraph) -> Result<RelationMatrix, AnalysisError> {
    edge_relation_with(g, Execution::Serial)
}

/// The matrix `L`: starts all-true and, for each b-bridge `b`, clears the
/// pairs lying in different strongly biconnected components of `G \ {b}`.
pub fn edge_relation_with(g: &Digraph, exec: Execution) -> Result<RelationMatrix, AnalysisError> {
    let bridges = b_bridges_with(g, exec)?;
    Ok(relation_over_bridges(g, &bridges, exec))
}

fn relation_over_bridges(g: &Digraph, bridges: &[Edge], exec: Execution) -> RelationMatrix {
    let mut relation = RelationMatrix::all_true(g.vertex_count());
    for rows in exec.map(bridges, |&b| sbc_rows_without_edge(g, b)) {
        relation.retain(&rows);
    }
    relation
}

pub fn two_edge_biconnected_blocks(g: &Digraph) -> Result<BlockFamily, AnalysisError> {
    two_edge_biconnected_blocks_with(g, Execution::Serial)
}

/// Maximal vertex sets of size >= 2 whose pairs share a strongly biconnected
/// component after any single arc deletion.
pub fn two_edge_biconnected_blocks_with(
    g: &Digraph,
    exec: Execution,
) -> Result<BlockFamily, AnalysisError> {
    let bridges = b_bridges_with(g, exec)?;
    let n = g.vertex_count();
    if bridges.is_empty() {
        if n < 2 {
            return Ok(BlockFamily::empty());
        }
        return Ok(BlockFamily::new([g.vertices().collect()]));
    }
    let helper = relation_over_bridges(g, &bridges, exec).helper_graph();
    Ok(undirected_blocks(&helper)
        .blocks
        .into_iter()
        .filter(|b| b.len() >= 2)
        .collect())
}

/// Maximal cliques (size >= 2) of the relation recomputed over every arc,
/// b-bridge or not, pair by pair. `n` must not exceed `guard`.
pub fn oracle_two_edge_biconnected_blocks(
    g: &Digraph,
    guard: usize,
) -> Result<BlockFamily, AnalysisError> {
    require_strongly_biconnected(g)?;
    let n = g.vertex_count();
    if n > guard {
        return Err(AnalysisError::GuardExceeded { size: n, guard });
    }
    let mut related = BitMatrix::filled(n, true);
    for &e in g.edges() {
        let d = strongly_biconnected_components(&g.remove_edge(e).expect("arc of the graph"));
        for x in 0..n {
            for y in 0..n {
                if !d.same_sbc(x, y) {
                    related.set(x, y, false);
                }
            }
        }
    }
    Ok(cliques_of_size_two_or_more(&related))
}

fn cliques_of_size_two_or_more(adj: &BitMatrix) -> BlockFamily {
    maximal_cliques(adj)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect()
}

/// The symmetric relation "every deletion of a vertex other than `x`, `y`
/// keeps them in a common component", with components of `G \ {w}` supplied
/// by `components_without`.
fn vertex_deletion_relation<F>(g: &Digraph, exec: Execution, components_without: F) -> BitMatrix
where
    F: Fn(&Digraph) -> Vec<VertexSet> + Sync + Send,
{
    let n = g.vertex_count();
    let vertices: Vec<VertexId> = g.vertices().collect();
    let per_vertex = exec.map(&vertices, |&w| {
        let sub = g.remove_vertex(w).expect("vertex in range");
        together_rows_without(n, w, &components_without(&sub.graph), &sub.to_original)
    });
    let mut relation = RelationMatrix::all_true(n);
    for rows in per_vertex {
        relation.retain(&rows);
    }
    relation.symmetric_cells()
}

pub fn two_strong_biconnected_blocks(g: &Digraph) -> Result<BlockFamily, AnalysisError> {
    two_strong_biconnected_blocks_with(g, Execution::Serial)
}

/// Maximal sets (size >= 2) whose pairs share a strongly biconnected
/// component of `G \ {z}` for every other vertex `z`.
pub fn two_strong_biconnected_blocks_with(
    g: &Digraph,
    exec: Execution,
) -> Result<BlockFamily, AnalysisError> {
    require_strongly_biconnected(g)?;
    let related = vertex_deletion_relation(g, exec, |h| {
        strongly_biconnected_components(h).components().to_vec()
    });
    Ok(cliques_of_size_two_or_more(&related))
}

fn require_strongly_connected(g: &Digraph) -> Result<(), AnalysisError> {
    if is_strongly_connected(g) {
        Ok(())
    } else {
        Err(AnalysisError::NotStronglyConnected)
    }
}

pub fn two_edge_blocks(g: &Digraph) -> Result<BlockFamily, AnalysisError> {
    two_edge_blocks_with(g, Execution::Serial)
}

/// Classes (size >= 2) of "same SCC after every single arc deletion",
/// obtained by refining a partition once per arc.
pub fn two_edge_blocks_with(g: &Digraph, exec: Execution) -> Result<BlockFamily, AnalysisError> {
    require_strongly_connected(g)?;
    let n = g.vertex_count();
    let per_edge = exec.map(g.edges(), |&e| {
        let h = g.remove_edge(e).expect("arc of the graph");
        strongly_connected_components(&h).class_of(n)
    });
    let mut label = vec![0usize; n];
    for class_of in per_edge {
        let mut renumber = std::collections::HashMap::new();
        for v in 0..n {
            let next = renumber.len();
            label[v] = *renumber.entry((label[v], class_of[v])).or_insert(next);
        }
    }
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for v in 0..n {
        if label[v] == classes.len() {
            classes.push(Vec::new());
        }
        classes[label[v]].push(v);
    }
    Ok(classes
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(VertexSet::from_sorted_unchecked)
        .collect())
}

pub fn two_strong_blocks(g: &Digraph) -> Result<BlockFamily, AnalysisError> {
    two_strong_blocks_with(g, Execution::Serial)
}

/// Maximal sets (size >= 2) whose pairs stay strongly connected under every
/// deletion of another vertex.
pub fn two_strong_blocks_with(g: &Digraph, exec: Execution) -> Result<BlockFamily, AnalysisError> {
    require_strongly_connected(g)?;
    let related =
        vertex_deletion_relation(g, exec, |h| strongly_connected_components(h).into_classes());
    Ok(cliques_of_size_two_or_more(&related))
}
