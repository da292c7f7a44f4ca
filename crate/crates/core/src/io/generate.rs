//! Seeded graph generators.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, which yields the
//! same stream on every platform, so a seed identifies a graph exactly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::connectivity::is_strongly_biconnected;
use crate::graph::{Digraph, Edge};

/// Rejection-sampling budget for [`gen_random_sb`].
pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no strongly biconnected sample in {attempts} attempts")]
    RetryBudgetExhausted { attempts: usize },
}

/// One Erdős–Rényi draw: for every ordered pair `(u, v)`, `u != v`, in
/// row-major order, one `f64` sample decides whether the arc is present.
fn sample_digraph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen::<f64>() < p {
                edges.push(Edge::new(u, v));
            }
        }
    }
    Digraph::from_valid_edges(n, edges)
}

/// Samples `G(n, p)` digraphs until one is strongly biconnected.
pub fn gen_random_sb(n: usize, p: f64, seed: u64) -> Result<Digraph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::InvalidParameters(format!(
            "n must be at least 3, got {n}"
        )));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(GenerateError::InvalidParameters(format!(
            "p must lie in (0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let g = sample_digraph(n, p, &mut rng);
        if is_strongly_biconnected(&g) {
            return Ok(g);
        }
    }
    Err(GenerateError::RetryBudgetExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

/// A directed Hamiltonian cycle over a shuffled vertex order plus uniformly
/// chosen extra arcs up to `m` in total. Always strongly biconnected, which
/// makes it usable at sparse densities where rejection sampling stalls.
pub fn gen_hamiltonian_sb(n: usize, m: usize, seed: u64) -> Result<Digraph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::InvalidParameters(format!(
            "n must be at least 3, got {n}"
        )));
    }
    if m < n || m > n * (n - 1) {
        return Err(GenerateError::InvalidParameters(format!(
            "m must lie in [{n}, {}], got {m}",
            n * (n - 1)
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = vec![false; n * n];
    let mut edges = Vec::with_capacity(m);
    for i in 0..n {
        let e = Edge::new(order[i], order[(i + 1) % n]);
        present[e.tail * n + e.head] = true;
        edges.push(e);
    }
    while edges.len() < m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !present[u * n + v] {
            present[u * n + v] = true;
            edges.push(Edge::new(u, v));
        }
    }
    Ok(Digraph::from_valid_edges(n, edges))
}
