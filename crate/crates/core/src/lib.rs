//! Connectivity analysis for simple directed graphs built around strong
//! biconnectivity: a digraph is *strongly biconnected* when it is strongly
//! connected and its underlying undirected graph is biconnected.
//!
//! The crate computes
//!
//! - strongly connected components and undirected blocks ([`connectivity`]),
//! - strongly biconnected components ([`sbc`]),
//! - b-bridges, b-articulation points and the 2-edge / 2-vertex strongly
//!   biconnected components ([`resilience`]),
//! - 2-edge-biconnected blocks, 2-strong-biconnected blocks, 2-edge blocks
//!   and 2-strong blocks ([`blocks`]),
//!
//! and ships brute-force oracles for each of them next to the fast paths.
//! [`io`] holds the edge-list format, JSON reports, DOT export, the seeded
//! random generator and the oracle cross-checker used by the `sbgraph` binary.
//!
//! ```
//! use sbgraph::{blocks, Digraph};
//!
//! // two directed triangles glued along the antiparallel pair 0 <-> 1
//! let g = Digraph::new(4, [(0, 1), (1, 0), (1, 2), (2, 0), (0, 3), (3, 1)]).unwrap();
//! let family = blocks::two_edge_biconnected_blocks(&g).unwrap();
//! assert!(family.iter().all(|b| b.len() >= 2));
//! ```

pub mod bitset;
pub mod blocks;
pub mod cliques;
pub mod connectivity;
pub mod family;
pub mod graph;
pub mod io;
pub mod resilience;
pub mod sbc;

use thiserror::Error;

pub use family::BlockFamily;
pub use graph::{Digraph, Edge, GraphError, Subgraph, UndirectedGraph, VertexId, VertexSet};
pub use sbc::SbcDecomposition;

/// Default vertex limit for subset-enumeration oracles.
pub const DEFAULT_ENUMERATION_GUARD: usize = 12;

/// Default vertex limit for maximal-clique oracles.
pub const DEFAULT_CLIQUE_GUARD: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("input graph is not strongly biconnected")]
    NotStronglyBiconnected,
    #[error("input graph is not strongly connected")]
    NotStronglyConnected,
    #[error("{size} vertices exceed the enumeration guard of {guard}")]
    GuardExceeded { size: usize, guard: usize },
}

/// How independent per-deletion rechecks are scheduled. Results are
/// identical either way.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[default]
    Serial,
    Parallel,
}

impl Execution {
    pub fn from_flag(parallel: bool) -> Self {
        if parallel {
            Execution::Parallel
        } else {
            Execution::Serial
        }
    }

    /// Maps `f` over `items`, preserving order.
    pub(crate) fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        use rayon::prelude::*;
        match self {
            Execution::Serial => items.iter().map(f).collect(),
            Execution::Parallel => items.par_iter().map(f).collect(),
        }
    }
}

pub(crate) fn require_strongly_biconnected(g: &Digraph) -> Result<(), AnalysisError> {
    if connectivity::is_strongly_biconnected(g) {
        Ok(())
    } else {
        Err(AnalysisError::NotStronglyBiconnected)
    }
}
