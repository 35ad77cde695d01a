//! End-to-end checks of the binary: reports, exit codes, determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dfuzzy::document::Document;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dfuzzy"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 output")
}

#[test]
fn separate_worked_pair() {
    let file = data("worked_pair.json");
    let out = run(&["analyze", "separate", "A", "B", "--file", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("per-component optimum D: 0.5e1+0.5e2"), "{text}");
    assert!(text.contains("intersection supremum M: 0.5e1+0.5e2"), "{text}");
    assert!(text.contains("separation theorem D = 1 - M: PASS"), "{text}");
}

#[test]
fn separate_structured_output_carries_same_content() {
    let file = data("worked_pair.json");
    let out = run(&[
        "analyze",
        "separate",
        "A",
        "B",
        "--file",
        file.to_str().unwrap(),
        "--format",
        "structured",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["best_degree"], "0.5e1+0.5e2");
    assert_eq!(value["intersection_max"], "0.5e1+0.5e2");
    assert_eq!(value["theorem_check"], "PASS");
}

#[test]
fn eval_converts_standard_entries() {
    let file = data("example1.json");
    let out = run(&["eval", "--file", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0.06e1+0.07e2"), "{text}");
    assert!(text.contains("0.06e1+0.04e2"), "{text}");
}

#[test]
fn de_morgan_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let source = data("worked_pair.json");
    let step = |args: &[&str]| {
        let out = run(args);
        assert!(out.status.success(), "step {args:?} failed: {out:?}");
    };

    // complement of the union
    let union_doc = dir.path().join("union.json");
    let lhs_doc = dir.path().join("lhs.json");
    step(&[
        "op", "union", "A", "B",
        "--file", source.to_str().unwrap(),
        "--out", "C",
        "--save", union_doc.to_str().unwrap(),
    ]);
    step(&[
        "op", "complement", "C",
        "--file", union_doc.to_str().unwrap(),
        "--out", "LHS",
        "--save", lhs_doc.to_str().unwrap(),
    ]);

    // intersection of the complements
    let na_doc = dir.path().join("na.json");
    let nb_doc = dir.path().join("nb.json");
    let rhs_doc = dir.path().join("rhs.json");
    step(&[
        "op", "complement", "A",
        "--file", source.to_str().unwrap(),
        "--out", "NotA",
        "--save", na_doc.to_str().unwrap(),
    ]);
    step(&[
        "op", "complement", "B",
        "--file", na_doc.to_str().unwrap(),
        "--out", "NotB",
        "--save", nb_doc.to_str().unwrap(),
    ]);
    step(&[
        "op", "intersection", "NotA", "NotB",
        "--file", nb_doc.to_str().unwrap(),
        "--out", "RHS",
        "--save", rhs_doc.to_str().unwrap(),
    ]);

    let lhs = Document::load(&lhs_doc).unwrap();
    let rhs = Document::load(&rhs_doc).unwrap();
    assert_eq!(
        lhs.get("LHS").unwrap().values(),
        rhs.get("RHS").unwrap().values()
    );
}

#[test]
fn algebraic_sum_guard_reports_point() {
    let file = data("worked_pair.json");
    let out = run(&["op", "algebraic-sum", "A", "A", "--file", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("point 1"), "{err}");
    assert!(err.contains("exceeds 1"), "{err}");
}

#[test]
fn props_deterministic_and_passing() {
    let args = ["props", "demorgan", "--seed", "1", "--trials", "10"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "byte-identical reruns");
    assert!(stdout(&first).contains("result: PASS"));
}

#[test]
fn props_all_passes() {
    let out = run(&["props", "all", "--seed", "42", "--trials", "40"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("separation"));
    assert!(text.contains("result: PASS (15 suites"));
}

#[test]
fn exit_codes() {
    // usage: unknown subcommand flag arrangement
    let out = run(&["op"]);
    assert_eq!(out.status.code(), Some(1));

    // usage: unknown suite
    let out = run(&["props", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));

    // usage: unknown set name
    let file = data("worked_pair.json");
    let out = run(&["analyze", "core", "Z", "--file", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // validation: malformed document
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"version\": 1").unwrap();
    let out = run(&["eval", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // success even when the verdict is negative
    let non_convex = dir.path().join("dip.json");
    std::fs::write(
        &non_convex,
        r#"{
            "version": 1,
            "universe": { "dim": 1, "points": [[0],[1],[2],[3]] },
            "sets": { "D": { "values": [
                {"e1":0.5,"e2":0.5}, {"e1":0.1,"e2":0.1},
                {"e1":0.5,"e2":0.5}, {"e1":0.2,"e2":0.2}
            ]}}
        }"#,
    )
    .unwrap();
    let out = run(&["analyze", "convexity", "D", "--file", non_convex.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("convex (alpha-cuts): no"), "{text}");
    assert!(text.contains("witness"), "{text}");
}

#[test]
fn analyze_core_plateau() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("plateau.json");
    std::fs::write(
        &doc,
        r#"{
            "version": 1,
            "universe": { "dim": 1, "points": [[0],[1],[2],[3]] },
            "sets": { "A": { "values": [
                {"e1":0.2,"e2":0.2}, {"e1":0.7,"e2":0.7},
                {"e1":0.7,"e2":0.7}, {"e1":0.3,"e2":0.3}
            ]}}
        }"#,
    )
    .unwrap();
    let out = run(&[
        "analyze", "core", "A",
        "--file", doc.to_str().unwrap(),
        "--epsilon", "0.05",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("supremum M: 0.7e1+0.7e2 (attained)"), "{text}");
    assert!(text.contains("core: points 1 (1), 2 (2)"), "{text}");
    assert!(text.contains("core grid-convex: yes"), "{text}");
    assert!(text.contains("q-set(epsilon=0.05e1+0.05e2): points 1, 2"), "{text}");
}

#[test]
fn analyze_bounded_and_shadow() {
    let file = data("worked_pair.json");
    let out = run(&["analyze", "bounded", "A", "--file", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("bounded: yes (finite universe)"));

    // shadows need two dimensions
    let out = run(&["analyze", "shadow", "A", "--file", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["analyze", "shadow", "A", "--file", data("example1.json").to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("shadow universe: dim 1"));
}

#[test]
fn subset_and_equals_verdicts() {
    let file = data("worked_pair.json");
    let out = run(&["op", "subset", "A", "B", "--file", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: not a subset"));

    let out = run(&["op", "equals", "A", "A", "--file", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("equal: yes"));
}

#[test]
fn convert_number_literal() {
    let out = run(&["convert", "0.5+(-0.2)k"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("idempotent: 0.3e1+0.7e2"), "{text}");
    assert!(text.contains("standard:   0.5+(-0.2)k"), "{text}");
}

#[test]
fn convert_document_deterministic_round_trip() {
    let file = data("example1.json");
    let dir = tempfile::tempdir().unwrap();

    let to_std = ["convert", "--file", file.to_str().unwrap(), "--to", "standard"];
    let first = run(&to_std);
    let second = run(&to_std);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "byte-identical across runs");
    assert!(stdout(&first).contains("\"a1\""));

    // standard -> idempotent lands on the same bytes as a direct render
    let std_doc = dir.path().join("std.json");
    let out = run(&[
        "convert", "--file", file.to_str().unwrap(),
        "--to", "standard",
        "--save", std_doc.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let direct = run(&["convert", "--file", file.to_str().unwrap(), "--to", "idempotent"]);
    let via_std = run(&["convert", "--file", std_doc.to_str().unwrap(), "--to", "idempotent"]);
    assert_eq!(direct.stdout, via_std.stdout);
}

#[test]
fn cartesian_across_documents() {
    let dir = tempfile::tempdir().unwrap();
    let other = dir.path().join("other.json");
    std::fs::write(
        &other,
        r#"{
            "version": 1,
            "universe": { "dim": 1, "points": [[10],[20]] },
            "sets": { "Y": { "values": [ {"e1":1,"e2":1}, {"e1":0.3,"e2":0.6} ] } }
        }"#,
    )
    .unwrap();
    let product = dir.path().join("product.json");
    let out = run(&[
        "op", "cartesian", "A", "Y",
        "--file", data("worked_pair.json").to_str().unwrap(),
        "--file2", other.to_str().unwrap(),
        "--out", "AxY",
        "--save", product.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("product universe: dim 2, 10 points"));
    let doc = Document::load(&product).unwrap();
    let set = doc.get("AxY").unwrap();
    assert_eq!(set.universe().dim(), 2);
    assert_eq!(set.universe().len(), 10);
    // value at (x1, y1) is min(0.8, (0.3, 0.6)) componentwise
    assert_eq!(set.value(3).to_string(), "0.3e1+0.6e2");
}
