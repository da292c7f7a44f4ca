//! Desk-scale timing of the 2-edge-biconnected block computation.

use std::time::{Duration, Instant};

use crate::blocks::two_edge_biconnected_blocks_with;
use crate::io::generate::{gen_hamiltonian_sb, GenerateError};
use crate::Execution;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchPoint {
    pub n: usize,
    pub m: usize,
    pub blocks: usize,
    /// Fastest of the repetitions.
    pub best: Duration,
}

/// Times `two_edge_biconnected_blocks` on `gen_hamiltonian_sb(n, density * n, seed)`
/// for each size, keeping the best of `reps` runs.
pub fn scaling(
    sizes: &[usize],
    density: usize,
    seed: u64,
    reps: usize,
    exec: Execution,
) -> Result<Vec<BenchPoint>, GenerateError> {
    sizes
        .iter()
        .map(|&n| {
            let g = gen_hamiltonian_sb(n, density * n, seed)?;
            let mut best = Duration::MAX;
            let mut blocks = 0;
            for _ in 0..reps.max(1) {
                let start = Instant::now();
                let family = two_edge_biconnected_blocks_with(&g, exec)
                    .expect("generated graphs are strongly biconnected");
                best = best.min(start.elapsed());
                blocks = family.len();
            }
            Ok(BenchPoint {
                n,
                m: g.edge_count(),
                blocks,
                best,
            })
        })
        .collect()
}

/// `t(n2)/t(n1)` divided by `(n2/n1)^3` for consecutive points; values at or
/// below 1 mean growth no faster than cubic.
pub fn cubic_growth_ratios(points: &[BenchPoint]) -> Vec<f64> {
    points
        .windows(2)
        .map(|w| {
            let time_ratio = w[1].best.as_secs_f64() / w[0].best.as_secs_f64().max(1e-9);
            let size_ratio = w[1].n as f64 / w[0].n as f64;
            time_ratio / size_ratio.powi(3)
        })
        .collect()
}
