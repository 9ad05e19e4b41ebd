use std::process::{Command, Output};

use serde_json::Value;

fn tiltlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltlab")).args(args).output().expect("runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = tiltlab(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{:?}: {} / {}", args, e, String::from_utf8_lossy(&out.stderr));
    });
    (v, out.status.code().unwrap())
}

#[test]
fn construct_dimensions() {
    for (spec, dim) in [("line(10,3)", 27), ("rect(5,2)", 45), ("path(D4,inward)", 7), ("k", 1), ("tri(path(A2),3)", 18)] {
        let (v, code) = json(&["construct", spec]);
        assert_eq!(code, 0);
        assert_eq!(v["dim"], dim, "{}", spec);
        assert_eq!(v["algebra"]["basis"].as_array().unwrap().len(), dim);
    }
}

#[test]
fn construct_round_trips_through_json() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["line(6,3)", "aus(path(A3,bipartite))", "tensor(path(A2),line(3,2))"] {
        let out = tiltlab(&["construct", spec, "--json"]);
        assert!(out.status.success());
        let path = dir.path().join("alg.json");
        std::fs::write(&path, &out.stdout).unwrap();
        let arg = format!("@{}", path.display());
        let (first, _) = json(&["construct", spec]);
        let (second, code) = json(&["construct", &arg]);
        assert_eq!(code, 0);
        assert_eq!(first["algebra"], second["algebra"], "{}", spec);
        assert_eq!(first["gabriel_arrows"], second["gabriel_arrows"]);
    }
}

#[test]
fn output_is_deterministic() {
    for args in [&["construct", "saus(path(A5))", "--json"][..], &["knit", "path(D5)", "--json"][..]] {
        assert_eq!(tiltlab(args).stdout, tiltlab(args).stdout);
    }
}

#[test]
fn compare_verdicts_and_exit_codes() {
    let (v, code) = json(&["compare", "line(10,3)", "saus(path(A5))", "rect(5,2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "consistent");
    assert_eq!(v["pairs"].as_array().unwrap().len(), 3);
    assert_eq!(v["algebras"].as_array().unwrap().len(), 3);
    assert_eq!(v["algebras"][0]["invariants"]["rank"], 10);
    for (a, b) in [("line(6,3)", "rect(2,3)"), ("line(4,3)", "path(D4)"), ("line(8,3)", "path(E8)")] {
        assert_eq!(json(&["compare", a, b]).1, 0, "{} vs {}", a, b);
    }
    let (v, code) = json(&["compare", "path(A3)", "rect(2,2)"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "distinguished");
}

#[test]
fn check_tilting_families() {
    for fam in ["P", "I", "S", "regular"] {
        let (v, code) = json(&["check-tilting", "path(A4)", fam]);
        assert_eq!(code, 0, "{}", fam);
        assert_eq!(v["verdict"], "certified-necessary");
        assert_eq!(v["failure"], Value::Null);
    }
    let (v, code) = json(&["check-tilting", "path(A4)", "S1,S2[1],S3[1],S4[3]"]);
    assert_eq!(code, 1);
    assert_eq!(v["exceptional"], false);
    assert_eq!(v["failure"]["i"], 2);
    assert_eq!(v["failure"]["j"], 3);
    assert_eq!(v["failure"]["r"], 1);
    let (v, _) = json(&["check-tilting", "path(A3)", "P", "--hom-range", "5"]);
    assert_eq!(v["hom_table"].as_array().unwrap().len(), 11);
}

#[test]
fn knit_counts_and_homogeneity() {
    let (v, code) = json(&["knit", "path(A3,linear)"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 6);
    assert_eq!(json(&["knit", "path(D4)"]).0["count"], 12);
    assert_eq!(json(&["knit", "path(D4,inward)"]).0["homogeneous"], true);
    for mask in 0..8 {
        let o: String = (0..3).map(|i| if mask >> i & 1 == 1 { '>' } else { '<' }).collect();
        let (v, _) = json(&["knit", &format!("path(A4,{})", o)]);
        assert_eq!(v["homogeneous"], false, "{}", o);
        assert_eq!(v["count"], 10);
    }
}

#[test]
fn knit_writes_ar_quiver_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ar.dot");
    let out = tiltlab(&["knit", "path(A3)", "--dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("shape=box").count(), 3);
    assert_eq!(dot.matches("->").count(), 6);
}

#[test]
fn verify_tensor_instances() {
    let (v, code) = json(&["verify-tensor", "shifted-simple:2"]);
    assert_eq!(code, 0);
    assert_eq!(v["matches"], true);
    let (v, code) = json(&["verify-tensor", "corrupted-sign"]);
    assert_eq!(code, 1);
    assert_eq!(v["matches"], false);
    assert!(v["witness"].as_str().unwrap().contains("d∘d"));
}

#[test]
fn usage_errors_exit_with_two() {
    let out = tiltlab(&["construct", "line(10;3)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`;`"));
    assert_eq!(tiltlab(&["construct", "blob(2)"]).status.code(), Some(2));
    assert_eq!(tiltlab(&["check-tilting", "path(A3)", "P9"]).status.code(), Some(2));
    assert_eq!(tiltlab(&["knit", "path(A3)", "--max-steps", "0"]).status.code(), Some(2));
    assert_eq!(tiltlab(&["frobnicate"]).status.code(), Some(2));
}
