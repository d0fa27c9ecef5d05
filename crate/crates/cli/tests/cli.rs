use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitgraph"))
        .args(args)
        .env_remove("ORBITGRAPH_MAX_N")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn components_of_two_component_example() {
    let v = json(&[
        "components",
        "--type",
        "AIII",
        "--shape",
        "4,3,3,1,1",
        "--sig",
        "6,6",
    ]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["components"], 2);
    assert_eq!(v["formula"], 2);
    assert_eq!(v["products"][0], "A(1;0) x A(2,2;2)");
    assert_eq!(v["products"][1], "A(1;1) x A(2,2;2)");
}

#[test]
fn graph_as_dot() {
    let out = run(&[
        "graph",
        "--type",
        "AIII",
        "--shape",
        "6,4,4,2,2",
        "--sig",
        "9,9",
        "--format",
        "dot",
    ]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("// orbit graph type=AIII shape=(6,4,4,2,2) signature=(9,9)"));
    assert!(dot.contains("components=1"));
    let nodes = dot
        .lines()
        .filter(|l| l.trim_start().starts_with('v') && l.contains("[label"))
        .filter(|l| !l.contains("--"))
        .count();
    assert_eq!(nodes, 18);
}

#[test]
fn enumerate_smallest_case() {
    let v = json(&[
        "enumerate",
        "--type",
        "AIII",
        "--shape",
        "2",
        "--sig",
        "1,1",
    ]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["diagrams"], serde_json::json!(["-+", "+-"]));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["enumerate", "--type", "CI", "--shape", "2", "--sig", "2,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("p = q"));

    let out = run(&["enumerate", "--type", "AIII", "--shape", "2", "--sig", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--sig"));

    let out = run(&["enumerate", "--type", "AII", "--shape", "2", "--sig", "1,1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "components",
        "--type",
        "AIII",
        "--shape",
        "2",
        "--sig",
        "1,1",
        "--format",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["closure", "--type", "AIII", "--sig", "7,7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn closure_of_smallest_signature() {
    let v = json(&["closure", "--type", "AIII", "--sig", "1,1"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(v["covers"].as_array().unwrap().len(), 2);
}

#[test]
fn induce_and_restrict() {
    let v = json(&[
        "induce",
        "--type",
        "AIII",
        "--shape",
        "4,4,3,2,2",
        "--diagram",
        "+-/-+/+",
    ]);
    assert_eq!(v["diagrams"].as_array().unwrap().len(), 3);
    let v = json(&[
        "induce",
        "--type",
        "AIII",
        "--shape",
        "4,3,3,1,1",
        "--height",
        "3",
        "--sig",
        "6,6",
    ]);
    assert_eq!(v["components"], 2);
    assert_eq!(v["reduced_components"], 2);
}

#[test]
fn classify_agrees_with_graph() {
    let v = json(&[
        "classify", "--type", "AIII", "--shape", "2,1", "--sig", "2,1",
    ]);
    assert_eq!(v["graph_agrees"], true);
    assert_eq!(v["flags"]["edgeless"], true);
    assert_eq!(v["flags"]["disconnected"], true);
}

#[test]
fn matrix_check_single_shape() {
    let out = run(&[
        "appendix-check",
        "--shape",
        "2,1",
        "--height",
        "1",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("maximum 4,1 (expected 4,1)"));
}

#[test]
fn sweep_respects_environment_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitgraph"))
        .args(["sweep", "--max-n", "8"])
        .env("ORBITGRAPH_MAX_N", "5")
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 11);
    assert!(text.contains("C1 generating function vs brute force (n <= 5"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "graph",
        "--type",
        "BDI",
        "--shape",
        "3,3,2,2,1",
        "--sig",
        "6,5",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["closure", "--type", "CI", "--sig", "3,3", "--format", "dot"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
