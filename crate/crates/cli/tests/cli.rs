use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn davis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_davis")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = davis(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn check_pentagon() {
    let r = report(&["check", "--input", &data("pentagon.json")]);
    assert_eq!(r["result"]["flag_no_square"], true);
    assert_eq!(r["result"]["hyperbolic"], true);
    assert_eq!(r["result"]["z2_witness"], Value::Null);
    assert_eq!(r["input"]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(r["tool"]["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn check_square_lists_the_square() {
    let r = report(&["check", "--input", &data("square.json")]);
    assert_eq!(r["result"]["flag"], true);
    assert_eq!(r["result"]["empty_squares"], serde_json::json!([["a", "b", "c", "d"]]));
    assert_eq!(r["result"]["z2_witness"]["first"], "a c");
}

#[test]
fn quotient_pentagon() {
    let r = report(&["quotient", "--input", &data("pentagon.json")]);
    assert_eq!(r["result"]["euler_characteristic"], -8);
    assert_eq!(r["result"]["chambers"], 32);
    assert_eq!(r["result"]["ranks"], serde_json::json!([1, 10, 1]));
    assert_eq!(r["result"]["orbifold_euler"], "-1/4");
}

#[test]
fn adjunction_defaults_and_file() {
    for args in [vec!["adjunction"], vec!["adjunction", "--input", &data("curves.json")]] {
        let r = report(&args);
        assert_eq!(r["result"]["c1_eval"], 2);
        assert_eq!(r["result"]["bounds"][0], serde_json::json!({ "k": 1, "genus_bound": 2 }));
        assert_eq!(r["result"]["profiles"]["X"]["genus_bound"], 2);
        assert_eq!(r["result"]["profiles"]["X'"]["genus_bound"], 1);
    }
}

#[test]
fn adjunction_rejects_non_stein_framing() {
    let out = davis(&["adjunction", "--input", &data("bad_framing.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn homology_of_builtins() {
    let r = report(&["homology", "--builtin", "rp2"]);
    assert_eq!(r["result"]["homology"]["1"]["torsion"], serde_json::json!([2]));
    let r = report(&["homology", "--builtin", "torus"]);
    assert_eq!(r["result"]["ranks"], serde_json::json!([1, 2, 1]));
}

#[test]
fn group_report_and_csv() {
    let r = report(&["group", "--input", &data("pentagon.json"), "--radius", "3", "--samples", "50"]);
    assert_eq!(r["result"]["growth"], serde_json::json!([1, 5, 15, 40]));
    assert_eq!(r["result"]["torsion_scan"]["violations"], serde_json::json!([]));
    assert_eq!(r["result"]["descent_sets_are_cliques"], true);
    assert_eq!(r["certified"], true);

    let out = davis(&["group", "--input", &data("square.json"), "--radius", "3", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "radius,sphere,ball\n0,1,1\n1,4,5\n2,8,13\n3,12,25\n");
    let out = davis(&["group", "--input", &data("pentagon.json"), "--radius", "1", "--format", "csv", "--ball"]);
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv.lines().next(), Some("index,length,normal_form"));
    assert_eq!(csv.lines().nth(2), Some("2,1,a"));
}

#[test]
fn davis_truncation_and_dot() {
    let r = report(&["davis", "--input", &data("pentagon.json"), "--tiles", "12"]);
    assert_eq!(r["certified"], true);
    let steps = r["result"]["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 12);
    assert!(steps.iter().all(|s| s["euler_characteristic"] == 1));
    assert_eq!(steps[1]["attach"]["certificate"]["status"], "verified");

    let out = davis(&["davis", "--input", &data("pentagon.json"), "--tiles", "3", "--format", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.contains("0 -- 1 [label=\"a\"];"));
}

#[test]
fn subdivide_square() {
    let r = report(&["subdivide", "--input", &data("square.json"), "--emit-complex"]);
    let found = &r["result"]["flag_no_square_subdivision"];
    assert_eq!(found["found"], true);
    assert_eq!(found["homology_preserved"], true);
    assert!(found["complex"]["vertices"].as_array().unwrap().len() > 4);
}

#[test]
fn exit_codes() {
    let failed = davis(&["subdivide", "--builtin", "simplex-boundary-4", "--rounds", "1"]);
    assert_eq!(failed.status.code(), Some(1));
    assert_eq!(davis(&["check", "--input", &data("missing.json")]).status.code(), Some(2));
    assert_eq!(davis(&["check", "--input", &data("broken.json")]).status.code(), Some(2));
    assert_eq!(davis(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(davis(&["group", "--builtin", "pentagon", "--radius", "6", "--max-elements", "100"]).status.code(), Some(3));
    assert_eq!(davis(&["quotient", "--builtin", "icosahedron", "--max-cells", "1000"]).status.code(), Some(3));
    assert_eq!(davis(&["davis", "--builtin", "pentagon", "--max-tiles", "0"]).status.code(), Some(2));
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = davis(&["group", "--builtin", "pentagon", "--radius", "2", "--seed", "17", "--samples", "30", "-o", path.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let r: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(r["seed"], 17);
    assert_eq!(r["result"]["free_product_law"]["seed"], 17);
}
