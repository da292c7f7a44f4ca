//! Cross-checks fast algorithms against their brute-force oracles and, on
//! disagreement, shrinks the input to a small witness.

use crate::blocks::{oracle_two_edge_biconnected_blocks, two_edge_biconnected_blocks};
use crate::connectivity::is_strongly_biconnected;
use crate::family::BlockFamily;
use crate::graph::{Digraph, Edge};
use crate::io::generate::{gen_random_sb, GenerateError};
use crate::sbc::{sbc_oracle, strongly_biconnected_components};
use crate::{AnalysisError, DEFAULT_CLIQUE_GUARD, DEFAULT_ENUMERATION_GUARD};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// Refinement vs subset-enumeration strongly biconnected components.
    Sbc,
    /// Helper-graph blocks vs maximal cliques of the full relation.
    TwoEdgeBiconnectedBlocks,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub kind: CheckKind,
    pub witness: Digraph,
    pub fast: BlockFamily,
    pub oracle: BlockFamily,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    pub sbc_checked: bool,
    pub blocks_checked: bool,
    pub mismatch: Option<Mismatch>,
}

impl OracleOutcome {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

type Fast = fn(&Digraph) -> BlockFamily;
type Oracle = fn(&Digraph) -> Result<BlockFamily, AnalysisError>;

fn fast_sbc(g: &Digraph) -> BlockFamily {
    strongly_biconnected_components(g)
        .components()
        .iter()
        .cloned()
        .collect()
}

fn oracle_sbc(g: &Digraph) -> Result<BlockFamily, AnalysisError> {
    Ok(sbc_oracle(g, DEFAULT_ENUMERATION_GUARD)?
        .components()
        .iter()
        .cloned()
        .collect())
}

fn fast_blocks(g: &Digraph) -> BlockFamily {
    two_edge_biconnected_blocks(g).expect("checked strongly biconnected")
}

fn oracle_blocks(g: &Digraph) -> Result<BlockFamily, AnalysisError> {
    oracle_two_edge_biconnected_blocks(g, DEFAULT_CLIQUE_GUARD)
}

/// Runs the SBC comparison on any graph and the block comparison when `g` is
/// strongly biconnected. Fails with a guard error if `g` is too large for
/// the SBC oracle.
pub fn oracle_check(g: &Digraph) -> Result<OracleOutcome, AnalysisError> {
    check_with(g, (fast_sbc, oracle_sbc), (fast_blocks, oracle_blocks))
}

fn check_with(
    g: &Digraph,
    sbc: (Fast, Oracle),
    blocks: (Fast, Oracle),
) -> Result<OracleOutcome, AnalysisError> {
    let mut outcome = OracleOutcome {
        sbc_checked: true,
        blocks_checked: false,
        mismatch: None,
    };
    if disagree(g, sbc)? {
        outcome.mismatch = Some(minimize(g, CheckKind::Sbc, sbc, |_| true));
        return Ok(outcome);
    }
    if is_strongly_biconnected(g) {
        outcome.blocks_checked = true;
        if disagree(g, blocks)? {
            outcome.mismatch = Some(minimize(
                g,
                CheckKind::TwoEdgeBiconnectedBlocks,
                blocks,
                is_strongly_biconnected,
            ));
        }
    }
    Ok(outcome)
}

fn disagree(g: &Digraph, (fast, oracle): (Fast, Oracle)) -> Result<bool, AnalysisError> {
    Ok(fast(g) != oracle(g)?)
}

/// Greedily deletes arcs while the disagreement persists and `admissible`
/// still holds, then drops trailing isolated vertices.
fn minimize(
    g: &Digraph,
    kind: CheckKind,
    pair: (Fast, Oracle),
    admissible: fn(&Digraph) -> bool,
) -> Mismatch {
    let still_bad = |h: &Digraph| admissible(h) && disagree(h, pair).unwrap_or(false);
    let mut current = g.clone();
    let mut progress = true;
    while progress {
        progress = false;
        let mut arcs: Vec<Edge> = current.edges().to_vec();
        arcs.sort_unstable();
        for e in arcs {
            let candidate = current.remove_edge(e).expect("arc of current witness");
            if still_bad(&candidate) {
                current = candidate;
                progress = true;
            }
        }
    }
    while current.vertex_count() > 0 {
        let last = current.vertex_count() - 1;
        if !current.in_neighbors(last).is_empty() || !current.out_neighbors(last).is_empty() {
            break;
        }
        let candidate = current.remove_vertex(last).expect("vertex in range").graph;
        if !still_bad(&candidate) {
            break;
        }
        current = candidate;
    }
    let (fast, oracle) = pair;
    Mismatch {
        kind,
        fast: fast(&current),
        oracle: oracle(&current).expect("witness is no larger than the input"),
        witness: current,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub graphs: usize,
    pub mismatches: Vec<(u64, Mismatch)>,
}

/// Vertex count and arc probability used for sweep graph `i`.
pub fn sweep_parameters(i: usize, n_min: usize, n_max: usize) -> (usize, f64) {
    const DENSITIES: [f64; 3] = [0.35, 0.5, 0.65];
    let span = n_max - n_min + 1;
    (n_min + i % span, DENSITIES[(i / span) % DENSITIES.len()])
}

/// Checks `count` strongly biconnected graphs; graph `i` comes from
/// `gen_random_sb(n_i, p_i, seed + i)` with parameters from
/// [`sweep_parameters`].
pub fn oracle_sweep(
    count: usize,
    seed: u64,
    n_min: usize,
    n_max: usize,
) -> Result<SweepSummary, SweepError> {
    let mut mismatches = Vec::new();
    for i in 0..count {
        let (n, p) = sweep_parameters(i, n_min, n_max);
        let graph_seed = seed.wrapping_add(i as u64);
        let g = gen_random_sb(n, p, graph_seed)?;
        if let Some(m) = oracle_check(&g)?.mismatch {
            mismatches.push((graph_seed, m));
        }
    }
    Ok(SweepSummary {
        graphs: count,
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}
