use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    root.join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toricgraph")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn triangle_has_the_zero_ideal() {
    assert_eq!(stdout(&["ideal", &data("k3.txt")]), "zero ideal\n");
}

#[test]
fn k4_ideal_under_grevlex() {
    let v = json(&["ideal", &data("k4.txt")]);
    assert_eq!(v["order"], "grevlex");
    assert_eq!(v["generators"].as_array().unwrap().len(), 2);
}

#[test]
fn glued_cycles_certificate() {
    let v = json(&["chroma", &data("glued_four_cycles.txt"), "--order", "lex:e6,e3,e1,e2,e4,e5,e7"]);
    assert_eq!(v["init_generators"], serde_json::json!(["e6*e7", "e3*e7", "e2*e4*e6"]));
    assert_eq!(v["cover"], serde_json::json!(["e2", "e7"]));
    assert_eq!(v["bound"], 5);
    assert_eq!(v["exact_chromatic_number"], 2);
}

#[test]
fn search_is_deterministic_per_seed() {
    let a = stdout(&["--seed", "7", "chroma", &data("extended_bow_tie.txt"), "--search", "6"]);
    let b = stdout(&["--seed", "7", "chroma", &data("extended_bow_tie.txt"), "--search", "6"]);
    assert_eq!(a, b);
}

#[test]
fn kmy_split_on_the_glued_cycles() {
    let v = json(&["kmy", &data("glued_four_cycles.txt"), "--edge", "e6"]);
    assert_eq!(v["y"], "e6");
    assert_eq!(v["degenerate"], false);
    assert_eq!(v["heights"]["I"], 2);
}

#[test]
fn heights_agree() {
    let v = json(&["height", &data("extended_bow_tie.txt")]);
    assert_eq!(v["formula"], v["degeneration"]);
    assert_eq!(v["nondegenerate_steps"], v["formula"]);
}

#[test]
fn graver_backends_agree() {
    let a = json(&["graver", &data("bow_tie.txt")]);
    let b = json(&["graver", &data("bow_tie.txt"), "--backend", "lawrence"]);
    assert_eq!(a, b);
}

#[test]
fn verify_passes_on_small_graphs() {
    let out = stdout(&["verify", "--exhaustive", "4"]);
    assert!(out.contains("height"));
    let v = json(&["verify", &data("square_with_pendant.txt")]);
    assert_eq!(v["height"]["status"], "pass");
}

#[test]
fn export_names_every_edge() {
    let out = stdout(&["export-m2", &data("k4.txt")]);
    assert!(out.contains("R = QQ[e1,e2,e3,e4,e5,e6]"));
    assert!(out.contains("ker f"));
}

#[test]
fn catalog_names_are_accepted() {
    assert_eq!(stdout(&["ideal", "K4"]), stdout(&["ideal", &data("k4.txt")]));
}

#[test]
fn corrupted_input_reports_the_line() {
    let path = std::env::temp_dir().join(format!("toricgraph-bad-{}.txt", std::process::id()));
    std::fs::write(&path, "4\n1 2\n2 x\n").unwrap();
    let out = run(&["ideal", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn edge_cap_is_enforced() {
    let out = run(&["--max-edges", "5", "ideal", "K4"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("capability"));
}

#[test]
fn missing_input_fails() {
    assert!(!run(&["ideal", "no-such-graph"]).status.success());
    assert!(!run(&["kmy", "K4", "--edge", "e9"]).status.success());
}
