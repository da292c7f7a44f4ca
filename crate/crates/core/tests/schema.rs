mod common;

use sbgraph::io::{analyze, ReportOptions};
use sbgraph::Digraph;

fn validator() -> jsonschema::Validator {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_valid(g: &Digraph, options: &ReportOptions) {
    let report: serde_json::Value =
        serde_json::from_str(&analyze(g, options).to_json().unwrap()).unwrap();
    let v = validator();
    let errors: Vec<String> = v.iter_errors(&report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}");
}

#[test]
fn fixture_reports_validate() {
    assert_valid(&common::fig1(), &ReportOptions::default());
    assert_valid(&common::fig2(), &ReportOptions::default());
}

#[test]
fn skipped_sections_validate() {
    // not strongly connected, and a guard that trips on the bidirected K5
    assert_valid(
        &Digraph::new(3, [(0, 1), (1, 2)]).unwrap(),
        &ReportOptions::default(),
    );
    let tight = ReportOptions {
        guard: 4,
        ..Default::default()
    };
    let report = analyze(&common::bidirected_complete(5), &tight);
    assert!(report.components_2esb.computed().is_none());
    assert_valid(&common::bidirected_complete(5), &tight);
}

#[test]
fn schema_rejects_non_integer_vertices() {
    let bad = serde_json::json!({
        "n": 1, "m": 0, "strongly_biconnected": true,
        "b_bridges": [], "b_articulation_points": [], "sbc": [["0"]],
        "blocks_2eb": [], "blocks_2sb": [], "blocks_2e": [], "blocks_2s": [],
        "components_2esb": [], "components_2vsb": []
    });
    assert!(!validator().is_valid(&bad));
}
