use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

use tropical_lie::linalg::json::{matrix_from_json, vector_from_json};
use tropical_lie::scalar_core::format::scalar_from_json;
use tropical_lie::EltScalar;

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tlie"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args, None);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} / {err}"));
    (code, v)
}

#[test]
fn eval_prints_scalar_json() {
    let (code, out, _) = run(&["eval", "(3,2)+(1,5)"], None);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"t":"3","layer":"2"}"#);
    let (_, out, _) = run(&["eval", "-(5,3)"], None);
    assert_eq!(out.trim(), r#"{"t":"5","layer":"-3"}"#);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(scalar_from_json(&v).unwrap(), EltScalar::new(5, -3));
}

#[test]
fn eval_rejects_malformed_input() {
    let (code, out, err) = run(&["eval", "(3,"], None);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("error"));
}

#[test]
fn lie_check_sl2() {
    let (code, v) = run_json(&["lie-check", &data("sl2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["base"], json!(["e", "f", "h"]));
    assert_eq!(v["cyclic_sums"][0]["triple"], json!([1, 2, 3]));
    assert_eq!(v["cyclic_sums"][0]["sums"].as_array().unwrap().len(), 3);
}

#[test]
fn lie_check_reports_violations() {
    let bad = r#"{"dim": 2, "alpha": [{"i": 1, "j": 1, "l": 2, "scalar": {"t": "0", "layer": "1"}}]}"#;
    let (code, out, _) = run(&["lie-check", "-"], Some(bad));
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["alternating"], json!([[1, 2]]));
}

#[test]
fn malformed_files_exit_with_two() {
    let (code, _, err) = run(&["lie-check", "-"], Some("{\"dim\": 2,\n"));
    assert_eq!(code, 2);
    assert!(err.contains("line"), "{err}");
    let out_of_range = r#"{"dim": 2, "alpha": [{"i": 3, "j": 1, "l": 1, "scalar": "bottom"}]}"#;
    let (code, _, err) = run(&["lie-check", "-"], Some(out_of_range));
    assert_eq!(code, 2);
    assert!(err.contains("alpha[0]"), "{err}");
    let (code, _, _) = run(&["lie-series", "/nonexistent/file.json"], None);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["--grid", "huge", "pbw"], None);
    assert_eq!(code, 2);
}

#[test]
fn lie_series_verdicts() {
    let (code, v) = run_json(&["lie-series", &data("pbw.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["solvable"], json!({"verdict": "holds", "step": 2}));
    assert_eq!(v["nilpotent"], json!({"verdict": "holds", "step": 2}));
    for step in v["derived"].as_array().unwrap() {
        for g in step.as_array().unwrap() {
            vector_from_json(g).unwrap();
        }
    }
    let (_, v) = run_json(&["--kmax", "3", "lie-series", &data("sl2.json")]);
    assert_eq!(v["solvable"]["verdict"], "never");
}

#[test]
fn lie_killing_sl2() {
    let (code, v) = run_json(&["--grid", "small", "lie-killing", &data("sl2.json"), "--samples", "50"]);
    assert_eq!(code, 0);
    let gram = matrix_from_json(&v["killing"]).unwrap();
    assert_eq!(gram.get(2, 2), &EltScalar::new(0, 8));
    assert_eq!(v["consistent"], true);
    assert_eq!(v["candidates"], 50);
}

#[test]
fn lie_classical_closure() {
    let (code, v) = run_json(&["lie-classical", "B", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["closed"], true);
    assert_eq!(v["size"], 3);
    let (code, _, _) = run(&["lie-classical", "E", "2"], None);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["lie-classical", "gl", "0"], None);
    assert_eq!(code, 2);
}

#[test]
fn lift_demo_is_seeded() {
    let args = ["--seed", "5", "lift-demo", "--samples", "100", "--dim", "2"];
    let (code, first) = run_json(&args);
    assert_eq!(code, 0);
    assert_eq!(first["certificate"]["verified"], true);
    let (_, second) = run_json(&args);
    assert_eq!(first, second);
    let (code, _, _) = run(&["--order", "-1", "lift-demo"], None);
    assert_eq!(code, 2);
}

#[test]
fn pbw_report() {
    let (code, v) = run_json(&["pbw"]);
    assert_eq!(code, 0);
    assert_eq!(v["conclusion"], "no injective morphism exists");
    assert_eq!(v["steps"].as_array().unwrap().len(), 8);
    for y in ["y1", "y2"] {
        for s in v[y].as_array().unwrap() {
            scalar_from_json(s).unwrap();
        }
    }
}
