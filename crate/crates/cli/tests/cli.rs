use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn ferrerslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ferrerslab"))
        .args(args)
        .env_remove("FERRERSLAB_MAX_SIDE")
        .env_remove("FERRERSLAB_MAX_VERTICES")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn k3_is_accepted_with_unit_positive_intervals() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.graph", "graph 3\n1 2\n2 3\n1 3\n");
    let out = ferrerslab(&["recognize", "co-tt", s(&k3)]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["schema"], "ferrerslab.report");
    assert_eq!(r["version"], 1);
    assert_eq!(r["answer"], "yes");
    for iv in r["certificate"]["intervals"].as_array().unwrap() {
        assert_eq!((iv["l"].as_i64(), iv["r"].as_i64()), (Some(1), Some(1)));
        assert_eq!(iv["sign"], "positive");
    }
}

#[test]
fn t_graph_is_rejected_and_named() {
    let dir = TempDir::new().unwrap();
    let t = dir.path().join("t.graph");
    assert_eq!(code(&ferrerslab(&["generate", "tgraph", "-o", s(&t)])), 0);
    let out = ferrerslab(&["recognize", "co-tt", s(&t)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["witness"]["forbidden_subgraph"]["name"], "T");
}

#[test]
fn c6_has_a_triangle_in_its_associated_graph() {
    let dir = TempDir::new().unwrap();
    let c6 = file(&dir, "c6.matrix", "matrix 3 3\n110\n011\n101\n");
    let out = ferrerslab(&["recognize", "fdim2", s(&c6)]);
    assert_eq!(code(&out), 1);
    let w = json(&out)["witness"].clone();
    assert_eq!(w["type"], "odd_cycle");
    assert_eq!(w["length"], 3);
}

#[test]
fn recognizer_kinds_on_identity() {
    let dir = TempDir::new().unwrap();
    let id = file(&dir, "id.matrix", "matrix 2 2\n10\n01\n");
    assert_eq!(code(&ferrerslab(&["recognize", "ferrers", s(&id)])), 1);
    for kind in ["fdim2", "interval-bigraph", "signed-bigraph"] {
        assert_eq!(code(&ferrerslab(&["recognize", kind, s(&id)])), 0, "{kind}");
    }
    for kind in ["staircase", "interval-bigraph", "signed-bigraph"] {
        assert_eq!(code(&ferrerslab(&["oracle", kind, s(&id)])), 0, "{kind}");
    }
}

#[test]
fn verify_accepts_own_representations() {
    let dir = TempDir::new().unwrap();
    let inputs = [
        file(&dir, "p4.graph", "graph 4\n1 2\n2 3\n3 4\n"),
        file(&dir, "claw.graph", "graph 4\n1 2\n1 3\n1 4\n"),
        file(&dir, "s.matrix", "matrix 3 3\n110\n100\n001\n"),
        file(&dir, "b.bigraph", "bigraph 2 3\n1 1\n1 2\n2 3\n"),
    ];
    for input in &inputs {
        let rep = dir.path().join("rep.json");
        assert_eq!(code(&ferrerslab(&["represent", s(input), "-o", s(&rep)])), 0, "{input:?}");
        assert_eq!(code(&ferrerslab(&["verify", s(input), s(&rep)])), 0, "{input:?}");
    }
}

#[test]
fn verify_rejects_moved_interval() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.graph", "graph 3\n1 2\n2 3\n1 3\n");
    let good = r#"[{"vertex":"1","l":1,"r":1,"sign":"+"},{"vertex":"2","l":1,"r":1,"sign":"+"},{"vertex":"3","l":1,"r":1,"sign":"+"}]"#;
    let moved = good.replacen(r#""l":1,"r":1,"sign":"+"}]"#, r#""l":5,"r":6,"sign":"+"}]"#, 1);
    assert_eq!(code(&ferrerslab(&["verify", s(&k3), s(&file(&dir, "good.json", good))])), 0);
    assert_eq!(code(&ferrerslab(&["verify", s(&k3), s(&file(&dir, "moved.json", &moved))])), 1);
}

#[test]
fn verify_reports_vertex_set_mismatch() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.graph", "graph 3\n1 2\n2 3\n1 3\n");
    let rep = file(&dir, "r.json", r#"[{"vertex":"1","l":1,"r":1,"sign":"+"}]"#);
    let out = ferrerslab(&["verify", s(&k3), s(&rep)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex-set mismatch"));
}

#[test]
fn generate_c4_is_an_eight_cycle() {
    let out = ferrerslab(&["generate", "C", "4"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("bigraph 4 4"));
    assert_eq!(text.lines().count(), 1 + 8);
}

#[test]
fn generate_rejects_bad_index() {
    assert_eq!(code(&ferrerslab(&["generate", "C", "2"])), 2);
    assert_eq!(code(&ferrerslab(&["generate", "nosuch", "1"])), 2);
}

#[test]
fn catalog_lists_fourteen_families() {
    let out = ferrerslab(&["catalog"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 14);
}

#[test]
fn crosscheck_is_deterministic() {
    let a = ferrerslab(&["crosscheck", "3", "0"]);
    let b = ferrerslab(&["crosscheck", "3", "0"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = ferrerslab(&["crosscheck", "4", "7", "--threads", "2"]);
    assert_eq!(code(&c), 0);
    assert_eq!(c.stdout, ferrerslab(&["crosscheck", "4", "7"]).stdout);
}

#[test]
fn caps_and_parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let big = file(&dir, "big.matrix", &format!("matrix 3 9\n{}\n{}\n{}\n", "1".repeat(9), "1".repeat(9), "1".repeat(9)));
    assert_eq!(code(&ferrerslab(&["recognize", "interval-bigraph", s(&big)])), 2);
    assert_eq!(code(&ferrerslab(&["recognize", "interval-bigraph", s(&big), "--max-side", "9"])), 0);
    let out = Command::new(env!("CARGO_BIN_EXE_ferrerslab"))
        .args(["recognize", "interval-bigraph", s(&big)])
        .env("FERRERSLAB_MAX_SIDE", "9")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let bad = file(&dir, "bad.graph", "graph 2\n1 3\n");
    assert_eq!(code(&ferrerslab(&["recognize", "co-tt", s(&bad)])), 2);
    assert_eq!(code(&ferrerslab(&["recognize", "co-tt", s(&big)])), 2);
}

#[test]
fn output_file_replaces_atomically() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("out.graph");
    fs::write(&out, "stale").unwrap();
    assert_eq!(code(&ferrerslab(&["generate", "sun", "4", "-o", s(&out)])), 0);
    assert!(fs::read_to_string(&out).unwrap().starts_with("graph 8"));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}
