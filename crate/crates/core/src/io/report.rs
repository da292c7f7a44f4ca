//! Aggregate analysis of one graph, serialized as JSON with a fixed key order.
//!
//! Sections whose preconditions fail or whose enumeration guard trips are
//! written as `{"skipped": "<reason>"}` instead of a value.

use std::fmt::Write as _;

use serde::Serialize;

use crate::blocks::{
    two_edge_biconnected_blocks_with, two_edge_blocks_with, two_strong_biconnected_blocks_with,
    two_strong_blocks_with,
};
use crate::connectivity::is_strongly_biconnected;
use crate::family::BlockFamily;
use crate::graph::{Digraph, VertexSet};
use crate::resilience::{
    b_articulation_points_with, b_bridges_with, components_2esb, components_2vsb,
};
use crate::sbc::strongly_biconnected_components;
use crate::{AnalysisError, Execution, DEFAULT_ENUMERATION_GUARD};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Region size limit for the exponential component enumerations.
    pub guard: usize,
    pub execution: Execution,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            guard: DEFAULT_ENUMERATION_GUARD,
            execution: Execution::Serial,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Section<T> {
    Computed(T),
    Skipped { skipped: String },
}

impl<T> Section<T> {
    pub fn computed(&self) -> Option<&T> {
        match self {
            Section::Computed(v) => Some(v),
            Section::Skipped { .. } => None,
        }
    }
}

impl<T> From<Result<T, AnalysisError>> for Section<T> {
    fn from(r: Result<T, AnalysisError>) -> Self {
        match r {
            Ok(v) => Section::Computed(v),
            Err(e) => Section::Skipped {
                skipped: e.to_string(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub strongly_biconnected: bool,
    pub b_bridges: Section<Vec<[usize; 2]>>,
    pub b_articulation_points: Section<VertexSet>,
    pub sbc: BlockFamily,
    pub blocks_2eb: Section<BlockFamily>,
    pub blocks_2sb: Section<BlockFamily>,
    pub blocks_2e: Section<BlockFamily>,
    pub blocks_2s: Section<BlockFamily>,
    pub components_2esb: Section<BlockFamily>,
    pub components_2vsb: Section<BlockFamily>,
}

pub fn analyze(g: &Digraph, options: &ReportOptions) -> AnalysisReport {
    let exec = options.execution;
    let sb = is_strongly_biconnected(g);
    let only_if_sb = |f: &dyn Fn() -> Result<BlockFamily, AnalysisError>| -> Section<BlockFamily> {
        if sb {
            f().into()
        } else {
            Err(AnalysisError::NotStronglyBiconnected).into()
        }
    };
    AnalysisReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        strongly_biconnected: sb,
        b_bridges: b_bridges_with(g, exec)
            .map(|bb| bb.into_iter().map(|e| [e.tail, e.head]).collect())
            .into(),
        b_articulation_points: b_articulation_points_with(g, exec).into(),
        sbc: BlockFamily::new(
            strongly_biconnected_components(g)
                .components()
                .iter()
                .cloned(),
        ),
        blocks_2eb: two_edge_biconnected_blocks_with(g, exec).into(),
        blocks_2sb: two_strong_biconnected_blocks_with(g, exec).into(),
        blocks_2e: two_edge_blocks_with(g, exec).into(),
        blocks_2s: two_strong_blocks_with(g, exec).into(),
        components_2esb: only_if_sb(&|| components_2esb(g, options.guard)),
        components_2vsb: only_if_sb(&|| components_2vsb(g, options.guard)),
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// Compact human-readable rendering, one line per section.
    pub fn to_text(&self) -> String {
        fn family(f: &BlockFamily) -> String {
            f.iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
        fn section<T>(s: &Section<T>, show: impl Fn(&T) -> String) -> String {
            match s {
                Section::Computed(v) => show(v),
                Section::Skipped { skipped } => format!("skipped ({skipped})"),
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "m: {}", self.m);
        let _ = writeln!(out, "strongly_biconnected: {}", self.strongly_biconnected);
        let _ = writeln!(
            out,
            "b_bridges: {}",
            section(&self.b_bridges, |bb| bb
                .iter()
                .map(|[t, h]| format!("({t},{h})"))
                .collect::<Vec<_>>()
                .join(" "))
        );
        let _ = writeln!(
            out,
            "b_articulation_points: {}",
            section(&self.b_articulation_points, |s| s.to_string())
        );
        let _ = writeln!(out, "sbc: {}", family(&self.sbc));
        for (name, s) in [
            ("blocks_2eb", &self.blocks_2eb),
            ("blocks_2sb", &self.blocks_2sb),
            ("blocks_2e", &self.blocks_2e),
            ("blocks_2s", &self.blocks_2s),
            ("components_2esb", &self.components_2esb),
            ("components_2vsb", &self.components_2vsb),
        ] {
            let _ = writeln!(out, "{name}: {}", section(s, family));
        }
        out
    }
}

/// [`analyze`] followed by JSON serialization.
pub fn emit_report(g: &Digraph, options: &ReportOptions) -> serde_json::Result<String> {
    analyze(g, options).to_json()
}
