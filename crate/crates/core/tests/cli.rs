use std::path::PathBuf;
use std::process::Command;

use matroid_lists::cli::{run, EXIT_ERROR, EXIT_INFEASIBLE, EXIT_OK};
use matroid_lists::io::{parse_json, read_json, MatroidDescription};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn cli(args: &[&str]) -> (i32, Value) {
    let out = run(std::iter::once("matroid-color").chain(args.iter().copied()).map(String::from));
    let value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("bad JSON {:?}: {e}", out.stdout));
    (out.code, value)
}

#[test]
fn chroma_of_k4() {
    let (code, out) = cli(&["chroma", "--matroid", &fixture("k4.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, serde_json::json!({"chi": 2}));
}

#[test]
fn rank_of_subset() {
    let (code, out) = cli(&["rank", "--matroid", &fixture("u24.json"), "--subset", "0,1,2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, serde_json::json!({"rank": 2}));
}

#[test]
fn infeasible_colouring_exits_with_certificate() {
    let (code, out) = cli(&["color", "--matroid", &fixture("u12.json"), "--lists", &fixture("u12_ones.lists.json")]);
    assert_eq!(code, EXIT_INFEASIBLE);
    assert_eq!(out["status"], "infeasible");
    assert_eq!(out["certificate"]["set"], serde_json::json!([0, 1]));
    assert_eq!(out["certificate"]["deficiency"], 1);
}

#[test]
fn feasible_colouring_respects_lists() {
    let (code, out) = cli(&["color", "--matroid", &fixture("k4.json"), "--lists", &fixture("k4_mixed.lists.json")]);
    assert_eq!(code, EXIT_OK);
    let lists: Value = read_json(std::path::Path::new(&fixture("k4_mixed.lists.json")), "lists").unwrap();
    let coloring = out["coloring"].as_array().unwrap();
    for (c, list) in coloring.iter().zip(lists["lists"].as_array().unwrap()) {
        assert!(list.as_array().unwrap().contains(c));
    }
}

#[test]
fn errors_are_json_with_exit_one() {
    let (code, out) = cli(&["rank", "--matroid", &fixture("missing.json")]);
    assert_eq!(code, EXIT_ERROR);
    assert_eq!(out["error"]["kind"], "construction");
    let (code, _) = cli(&["rank", "--matroid", &fixture("u24.json"), "--subset", "0,9"]);
    assert_eq!(code, EXIT_ERROR);
}

#[test]
fn matroid_fixtures_round_trip() {
    for name in ["u12.json", "u24.json", "k4.json", "k5.json", "fano.json", "partition.json"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let first: MatroidDescription = parse_json(&text, "matroid").unwrap();
        let m = first.build().unwrap();
        let again = MatroidDescription::of(&m).unwrap();
        assert_eq!(again, first, "{name}");
        let reparsed: MatroidDescription = parse_json(&serde_json::to_string(&again).unwrap(), "matroid").unwrap();
        assert_eq!(reparsed, first, "{name}");
    }
}

#[test]
fn binary_matches_library() {
    let args = ["uncross", "--matroid", &fixture("k4.json"), "--lists", &fixture("k4_mixed.lists.json")];
    let out = Command::new(env!("CARGO_BIN_EXE_matroid-color")).args(args).output().unwrap();
    let lib = run(std::iter::once("matroid-color").chain(args.iter().copied()).map(String::from));
    assert_eq!(out.status.code(), Some(lib.code));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
}
