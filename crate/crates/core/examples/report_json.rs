//! Full analysis report as JSON, for an edge list given on the command line
//! or the 16-vertex fixture.
//!
//! cargo run --example report_json -- path/to/graph.edges

use sbgraph::io::{analyze, parse_edge_list, read_edge_list, ReportOptions};
use sbgraph::Execution;

fn main() {
    let g = match std::env::args().nth(1) {
        Some(path) => read_edge_list(std::fs::File::open(path).expect("readable file"))
            .expect("valid edge list"),
        None => parse_edge_list(include_str!("../fixtures/fig1.edges")).unwrap(),
    };
    let options = ReportOptions {
        execution: Execution::Parallel,
        ..Default::default()
    };
    let report = analyze(&g, &options);
    print!("{}", report.to_json().unwrap());
    eprint!("{}", report.to_text());
}
