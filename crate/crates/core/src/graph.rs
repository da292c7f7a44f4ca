//! Simple directed graphs with dense vertex ids, plus the derived views the
//! connectivity analyses need: arc deletion, vertex deletion, induced
//! subgraphs and the underlying undirected graph.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Dense vertex index in `0..n` of the owning graph.
pub type VertexId = usize;

/// A directed arc, identified by its ordered endpoint pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    pub const fn new(tail: VertexId, head: VertexId) -> Self {
        Self { tail, head }
    }

    pub const fn reversed(self) -> Self {
        Self {
            tail: self.head,
            head: self.tail,
        }
    }
}

impl From<(VertexId, VertexId)> for Edge {
    fn from((tail, head): (VertexId, VertexId)) -> Self {
        Self { tail, head }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tail, self.head)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate arc {0}")]
    DuplicateEdge(Edge),
    #[error("arc {0} is not in the graph")]
    MissingEdge(Edge),
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a set from an already sorted, deduplicated vector.
    pub(crate) fn from_sorted_unchecked(members: Vec<VertexId>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.iter().all(|v| other.contains(v))
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Maps every member through `map`, returning a new canonical set.
    pub fn map(&self, map: impl Fn(VertexId) -> VertexId) -> VertexSet {
        self.iter().map(map).collect()
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut members: Vec<VertexId> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self(members)
    }
}

impl<const N: usize> From<[VertexId; N]> for VertexSet {
    fn from(members: [VertexId; N]) -> Self {
        members.into_iter().collect()
    }
}

impl From<Vec<VertexId>> for VertexSet {
    fn from(members: Vec<VertexId>) -> Self {
        members.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple digraph. Arcs keep their insertion order; adjacency
/// lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
}

impl Digraph {
    /// Builds a digraph on `n` vertices. Self-loops, duplicate arcs and
    /// out-of-range endpoints are rejected.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &e in &edges {
            for v in [e.tail, e.head] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if e.tail == e.head {
                return Err(GraphError::SelfLoop(e.tail));
            }
            out_adj[e.tail].push(e.head);
            in_adj[e.head].push(e.tail);
        }
        for (tail, heads) in out_adj.iter_mut().enumerate() {
            heads.sort_unstable();
            if let Some(w) = heads.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(Edge::new(tail, w[0])));
            }
        }
        for tails in &mut in_adj {
            tails.sort_unstable();
        }
        Ok(Self {
            n,
            edges,
            out_adj,
            in_adj,
        })
    }

    /// Construction for arc lists already known to be valid.
    pub(crate) fn from_valid_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for e in &edges {
            out_adj[e.tail].push(e.head);
            in_adj[e.head].push(e.tail);
        }
        out_adj.iter_mut().for_each(|l| l.sort_unstable());
        in_adj.iter_mut().for_each(|l| l.sort_unstable());
        Self {
            n,
            edges,
            out_adj,
            in_adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v]
    }

    pub fn has_edge(&self, tail: VertexId, head: VertexId) -> bool {
        tail < self.n && self.out_adj[tail].binary_search(&head).is_ok()
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// `G \ {e}`: same vertex set, arc `e` dropped.
    pub fn remove_edge(&self, e: Edge) -> Result<Digraph, GraphError> {
        if !self.has_edge(e.tail, e.head) {
            return Err(GraphError::MissingEdge(e));
        }
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Ok(Self::from_valid_edges(self.n, edges))
    }

    /// `G \ {w}` with the remaining vertices re-indexed densely.
    pub fn remove_vertex(&self, w: VertexId) -> Result<Subgraph, GraphError> {
        self.check_vertex(w)?;
        Ok(self.induced_by_mask(|v| v != w))
    }

    /// Subgraph induced on `s`, re-indexed in ascending order of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Subgraph, GraphError> {
        if let Some(&last) = s.as_slice().last() {
            self.check_vertex(last)?;
        }
        Ok(self.induced_by_mask(|v| s.contains(v)))
    }

    pub(crate) fn induced_by_mask(&self, keep: impl Fn(VertexId) -> bool) -> Subgraph {
        const ABSENT: usize = usize::MAX;
        let mut to_local = vec![ABSENT; self.n];
        let mut to_original = Vec::new();
        for (v, slot) in to_local.iter_mut().enumerate() {
            if keep(v) {
                *slot = to_original.len();
                to_original.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| to_local[e.tail] != ABSENT && to_local[e.head] != ABSENT)
            .map(|e| Edge::new(to_local[e.tail], to_local[e.head]))
            .collect();
        Subgraph {
            graph: Digraph::from_valid_edges(to_original.len(), edges),
            to_original,
        }
    }

    /// Forgets arc directions; antiparallel pairs merge into one edge.
    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::new(self.n, self.edges.iter().map(|e| (e.tail, e.head)))
    }
}

/// A derived graph together with its local → original vertex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Digraph,
    pub to_original: Vec<VertexId>,
}

impl Subgraph {
    pub fn original(&self, local: VertexId) -> VertexId {
        self.to_original[local]
    }

    /// Local id of an original vertex, if it survived.
    pub fn local(&self, original: VertexId) -> Option<VertexId> {
        self.to_original.binary_search(&original).ok()
    }
}

/// Simple undirected graph; edges are stored once as `(min, max)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl UndirectedGraph {
    /// Self-loops are dropped and repeated pairs (in either orientation)
    /// collapse into a single edge.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut edges: Vec<(VertexId, VertexId)> = pairs
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            assert!(b < n, "edge endpoint {b} out of range for {n} vertices");
            adj[a].push(b);
            adj[b].push(a);
        }
        adj.iter_mut().for_each(|l| l.sort_unstable());
        Self { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }
}
