use std::process::{Command, Output};

use serde_json::Value;

fn nilaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilaut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = nilaut(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[test]
fn element_calculator() {
    assert_eq!(ok(&["mul", "--rank", "2", "x2", "x1"]).trim(), "x1*x2*[x1,x2]^-1");
    assert_eq!(ok(&["inv", "--rank", "2", "x1*x2"]).trim(), "x1^-1*x2^-1*[x1,x2]^-1");
    assert_eq!(ok(&["comm", "--rank", "2", "x1", "x1"]).trim(), "1");
    assert_eq!(ok(&["eval", "--rank", "3", "x2*x1"]).trim(), "x1*x2*[x1,x2]^-1");
    let js: Value = serde_json::from_str(&ok(&["--json", "comm", "--rank", "2", "x1", "x2"])).unwrap();
    assert_eq!(js["element"], "[x1,x2]");
}

#[test]
fn automorphism_commands() {
    let theta = r#"{"rank":2,"images":["x1^-1","x2^-1"]}"#;
    assert_eq!(ok(&["classify", theta]).trim(), "SymmetryModIA");
    assert_eq!(ok(&["apply", theta, "x1*x2"]).trim(), "x1^-1*x2^-1");
    let id = ok(&["--json", "compose", theta, theta]);
    let id: Value = serde_json::from_str(&id).unwrap();
    assert_eq!(id["images"], serde_json::json!(["x1", "x2"]));
    assert_eq!(
        ok(&["invert", r#"{"rank":2,"images":["x1*x2","x2"]}"#]),
        "x1 -> x1*x2^-1\nx2 -> x2\n"
    );

    let ia = r#"{"rank":3,"images":["x1*[x2,x3]","x2","x3"]}"#;
    assert_eq!(ok(&["is-inner", ia]).trim(), "not inner");
    let inner = r#"{"rank":2,"images":["x1*[x1,x2]","x2"]}"#;
    assert_eq!(ok(&["is-inner", inner]).trim(), "inner: conjugation by x2^-1");

    let split = ok(&[
        "--json",
        "split-ia",
        "--index",
        "1",
        r#"{"rank":3,"images":["x1","x2*[x2,x3]*[x1,x2]","x3"]}"#,
    ]);
    let split: Value = serde_json::from_str(&split).unwrap();
    assert_eq!(split["plus"]["images"][1], "x2*[x2,x3]");
    assert_eq!(split["minus"]["images"][1], "x2*[x1,x2]");
}

#[test]
fn canonical_forms() {
    assert!(ok(&["canon", "[[2,1],[-3,-2]]"]).starts_with("type (0,0,1)\n"));
    let js: Value = serde_json::from_str(&ok(&["--json", "canon", "[[-1,0],[2,1]]"])).unwrap();
    assert_eq!(js["type"], serde_json::json!([1, 1, 0]));
    assert_eq!(nilaut(&["canon", "[[1,1],[0,1]]"]).status.code(), Some(2));
}

#[test]
fn decode() {
    let theta = r#"{"rank":2,"images":["x1^-1*[x1,x2]^2","x2^-1"]}"#;
    let out = ok(&["decode", "--theta", theta, "--basis", "x1", "--basis", "x2", "--index", "1"]);
    assert_eq!(out.trim(), "x1*[x1,x2]^-1");
    let star = r#"{"rank":2,"images":["x1^-1","x2^-1"]}"#;
    let out = nilaut(&["decode", "--theta", star, "--basis", "x1*x2", "--basis", "x2", "--index", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(nilaut(&["mul", "--rank", "2", "x3", "x1"]).status.code(), Some(2));
    assert_eq!(nilaut(&["mul", "--rank", "2", "x1*", "x1"]).status.code(), Some(2));
    assert_eq!(nilaut(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(nilaut(&["mul", "x1", "x2"]).status.code(), Some(2));
    assert_eq!(nilaut(&["classify", "{not json"]).status.code(), Some(2));
    assert_eq!(nilaut(&["verify", "--rank-min", "1"]).status.code(), Some(2));
    assert_eq!(nilaut(&["verify", "--rank-max", "9"]).status.code(), Some(2));
    assert_eq!(
        nilaut(&["verify", "--inject-mutant", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_is_deterministic_and_matches_golden() {
    let args = [
        "--json", "verify", "--rank-min", "2", "--rank-max", "3", "--trials", "1", "--seed", "7",
    ];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let golden = include_str!("golden/verify_seed7_trials1.json");
    assert_eq!(first, golden);
    let report: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(report["passed"], true);
    for key in ["suite_version", "ranks", "seed", "trials", "checks", "passed"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_table_output() {
    let out = ok(&["verify", "--rank-min", "2", "--rank-max", "2", "--trials", "3"]);
    assert!(out.contains("group_axioms"));
    assert!(out.trim_end().ends_with("all checks passed"));
}

#[test]
fn injected_mutant_fails_group_axioms() {
    let out = nilaut(&[
        "--json", "verify", "--rank-min", "2", "--rank-max", "2", "--trials", "20",
        "--inject-mutant", "mul-sign",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], false);
    let group = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "group_axioms")
        .unwrap();
    assert_eq!(group["status"], "fail");
    assert!(group["counterexample"].is_object());
}

#[test]
fn default_verify_passes() {
    let out = ok(&["verify"]);
    assert!(out.contains("ranks 2..5"));
    assert!(out.trim_end().ends_with("all checks passed"));
}
