//! User-facing surfaces: the edge-list file format, JSON analysis reports,
//! DOT export, seeded graph generators and the oracle cross-checker.

pub mod bench;
pub mod dot;
pub mod edge_list;
pub mod generate;
pub mod oracle;
pub mod report;

pub use dot::export_dot;
pub use edge_list::{parse_edge_list, read_edge_list, write_edge_list, ParseError};
pub use generate::{gen_hamiltonian_sb, gen_random_sb, GenerateError};
pub use oracle::{
    oracle_check, oracle_sweep, CheckKind, Mismatch, OracleOutcome, SweepError, SweepSummary,
};
pub use report::{analyze, emit_report, AnalysisReport, ReportOptions};
