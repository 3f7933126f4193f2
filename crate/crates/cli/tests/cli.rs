//! End-to-end tests running the `liemult` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn liemult(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liemult"))
        .args(args)
        .env_remove("LIEMULT_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn tmp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("liemult-test-{}-{name}", std::process::id()))
}

#[test]
fn mult_three_methods_agree() {
    let out = liemult(&["mult", "A2", "1", "1", "0", "0", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("all methods agree: multiplicity 2"), "{text}");
    assert!(text.contains("formula"), "{text}");
    assert!(text.contains("genfun"), "{text}");
    assert!(text.contains("freudenthal"), "{text}");
}

#[test]
fn mult_g2_highest_weight() {
    let out = liemult(&["mult", "G2", "0", "1", "0", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("multiplicity 1"));
}

#[test]
fn mult_resolves_b2_alias() {
    let out = liemult(&["mult", "B2", "2", "0", "0", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("C2"), "{text}");
    assert!(text.contains("multiplicity 2"), "{text}");
}

#[test]
fn mult_reflects_non_dominant_weight() {
    let out = liemult(&["mult", "A2", "3", "3", "-1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dominant representative (1, 1)"), "{text}");
    assert!(text.contains("all methods agree"), "{text}");
}

#[test]
fn mult_formula_declines_unsupported_weight() {
    let out = liemult(&["mult", "A2", "6", "6", "5", "0", "--method", "formula"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("no closed form"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    let out = liemult(&["mult", "X9", "1", "1", "0", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = liemult(&["mult", "A2", "-1", "1", "0", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = liemult(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dim_g2_fundamental() {
    let out = liemult(&["dim", "G2", "1", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dimension 7"));
}

#[test]
fn table_g2_seven_plus_seven() {
    let out = liemult(&["table", "G2", "0", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("checksum 14"), "{text}");
    assert!(text.contains("(0, 0)"), "{text}");
}

#[test]
fn a_series_csv_schema() {
    let out = liemult(&[
        "a-series", "A2", "1", "1", "--order", "2", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "algebra,p,q,m,n,method,value");
    assert_eq!(lines.len(), 1 + 9, "one row per (p, q) pair: {text}");
    assert!(lines.contains(&"A2,1,1,1,1,a-series,1"), "{text}");
    assert!(lines.contains(&"A2,0,0,1,1,a-series,0"), "{text}");
}

#[test]
fn mult_csv_schema() {
    let out = liemult(&["mult", "G2", "1", "1", "1", "0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "algebra,p,q,m,n,method,value");
    assert!(lines.contains(&"G2,1,1,1,0,freudenthal,4"), "{text}");
    assert!(lines.contains(&"G2,1,1,1,0,formula,4"), "{text}");
    assert!(lines.contains(&"G2,1,1,1,0,genfun,4"), "{text}");
}

#[test]
fn character_c2_five_dim() {
    let out = liemult(&["character", "C2", "0", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dimension 5"), "{text}");
    assert!(text.contains("x2"), "{text}");
}

#[test]
fn json_output_round_trips_byte_identical() {
    let out = liemult(&["mult", "C2", "2", "1", "0", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    let rendered = serde_json::to_string_pretty(&value).expect("re-render");
    assert_eq!(text.trim_end(), rendered, "canonical JSON must round-trip");
    assert_eq!(value["agree"], serde_json::json!(true));
    assert_eq!(value["algebra"], serde_json::json!("C2"));
}

#[test]
fn format_env_variable_sets_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_liemult"))
        .args(["dim", "A2", "1", "1"])
        .env("LIEMULT_FORMAT", "csv")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("algebra,p,q,m,n,method,value"), "{text}");
    assert!(text.contains("A2,1,1,,,dimension,8"), "{text}");
}

#[test]
fn verify_min_form_passes() {
    let out = liemult(&["verify", "--suite", "min-form", "--bound", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("overall: PASS"));
}

#[test]
fn verify_three_way_json_report() {
    let out = liemult(&[
        "verify",
        "--suite",
        "three-way",
        "--alg",
        "A2",
        "--pmax",
        "3",
        "--qmax",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON report");
    assert_eq!(value["overall_pass"], serde_json::json!(true));
    assert_eq!(value["reports"][0]["suite"], serde_json::json!("three-way"));
    assert_eq!(value["reports"][0]["mismatches"], serde_json::json!([]));
}

#[test]
fn reconstruct_g2_writes_24_slots() {
    let path = tmp_path("g2-numerator.txt");
    let out = liemult(&["reconstruct-g2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("770 terms"), "{text}");
    let artifact = std::fs::read_to_string(&path).expect("artifact written");
    std::fs::remove_file(&path).ok();
    assert_eq!(artifact.matches("# g[").count(), 24);
    let mut lines = artifact.lines();
    assert_eq!(lines.next(), Some("# g[0][0]"));
    assert!(
        lines.next().unwrap().starts_with('1'),
        "g[0][0] has constant term 1"
    );
}

#[test]
fn unwritable_output_exits_4() {
    let out = liemult(&[
        "dim",
        "A2",
        "1",
        "1",
        "--output",
        "/nonexistent-dir-for-liemult/out.txt",
    ]);
    assert_eq!(out.status.code(), Some(4));
}
