use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

const SMALL: &str = "p 7 7\ne 1 2\ne 2 3\ne 3 4\ne 1 4\ne 1 5\ne 5 6\ne 6 7\ns 1 2\ns 3 4\ns 6 7\nt 1 4\nt 2 3\nt 5 6\n";
const C4: &str = "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\ns 1 2\ns 3 4\nt 2 3\nt 1 4\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchdist")).args(args).env_remove("MATCHDIST_BUDGET").output().unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn distance_on_the_small_example() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "small.txt", SMALL);
    let (v, code) = json(&["distance", s(&p), "--witness"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["answer"], 4);
    assert_eq!(v["method"], "fpt");
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    let (o, _) = json(&["distance", s(&p), "--method", "oracle"]);
    assert_eq!(o["answer"], 4);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "small.txt", SMALL);
    let a = run(&["distance", s(&p), "--witness", "--json", "--threads", "1"]);
    let b = run(&["distance", s(&p), "--witness", "--json", "--threads", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn identity_unreachable_and_strict() {
    let dir = TempDir::new().unwrap();
    let id = file(&dir, "id.txt", "p 2 1\ne 1 2\ns 1 2\nt 1 2\n");
    assert_eq!(json(&["distance", s(&id)]).0["answer"], 0);
    let c4 = file(&dir, "c4.txt", C4);
    let (v, code) = json(&["distance", s(&c4)]);
    assert_eq!((v["answer"].as_str(), code), (Some("inf"), 0));
    assert_eq!(run(&["distance", s(&c4), "--strict"]).status.code(), Some(1));
    assert_eq!(json(&["reachable", s(&c4)]).0["answer"], false);
}

#[test]
fn slack_and_capability_errors() {
    let dir = TempDir::new().unwrap();
    let p4 = file(&dir, "p4.txt", "p 4 3\ne 1 2\ne 2 3\ne 3 4\ns 2 3\nt 1 2\n");
    let (v, _) = json(&["distance", s(&p4)]);
    assert_eq!(v["method"], "exact-nonmaximal");
    assert_eq!(v["answer"], 1);
    let tri = file(&dir, "tri.txt", "p 3 3\ne 1 2\ne 2 3\ne 1 3\ns 1 2\nt 2 3\n");
    assert_eq!(run(&["distance", s(&tri), "--method", "fpt"]).status.code(), Some(4));
    let (v, code) = json(&["distance", s(&tri)]);
    assert_eq!((v["method"].as_str(), code), (Some("oracle"), 0));
    let c4 = file(&dir, "c4.txt", C4);
    assert_eq!(run(&["distance", s(&c4), "--method", "slack"]).status.code(), Some(4));
}

#[test]
fn parse_and_budget_errors() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "p 2 1\ne 1 3\n");
    let (v, code) = json(&["distance", s(&bad)]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("parse"), 2));
    let small = file(&dir, "small.txt", SMALL);
    assert_eq!(run(&["distance", s(&small), "--method", "oracle", "--budget", "2"]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_matchdist")).args(["diameter", s(&small)]).env("MATCHDIST_BUDGET", "1").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn connectivity_and_partition() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.txt", C4);
    let p3 = file(&dir, "p3.txt", "p 3 2\ne 1 2\ne 2 3\n");
    let k2 = file(&dir, "k2.txt", "p 2 1\ne 1 2\n");
    assert_eq!(json(&["connected", s(&c4), "--k", "2"]).0["answer"], false);
    assert_eq!(json(&["connected", s(&p3), "--k", "1"]).0["answer"], true);
    let (far, code) = json(&["connected", s(&p3), "--k", "2"]);
    assert_eq!((far["answer"].as_bool(), code), (Some(true), 0));
    assert!(far["detail"]["warning"].is_string());
    assert_eq!(json(&["diameter", s(&p3), "--k", "2"]).0["answer"], 0);
    let egd = json(&["egd", s(&p3)]).0;
    assert_eq!(egd["answer"]["D"], serde_json::json!([1, 3]));
    assert_eq!(egd["answer"]["A"], serde_json::json!([2]));
    assert_eq!(egd["answer"]["C"], serde_json::json!([]));
    assert_eq!(json(&["egd", s(&k2)]).0["answer"]["C"], serde_json::json!([1, 2]));
    assert_eq!(json(&["egd", s(&c4)]).0["answer"]["C"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn generated_gadgets_round_trip_through_the_other_commands() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("k2.txt");
    let (v, code) = json(&["gen", "vc", "--edges", "1-2", "--out", s(&out)]);
    assert_eq!(code, 0);
    assert_eq!(v["answer"]["vertices"], 15);
    let note: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("k2.txt.json")).unwrap()).unwrap();
    assert_eq!(note["roles"]["kind"], "vertex-cover");
    assert_eq!(json(&["distance", s(&out)]).0["answer"], 5);
    assert_eq!(json(&["diameter", s(&out), "--k", "7"]).0["answer"], 11);

    let spec = file(&dir, "three.txt", "# three items\nitems 3\nset 1\nset 1 2\nset 2 3\n");
    let (a, _) = json(&["gen", "setcover", "--spec", s(&spec)]);
    let (b, _) = json(&["gen", "setcover", "--items", "3", "--sets", "1;1,2;2,3"]);
    assert_eq!(a["detail"]["instance"], b["detail"]["instance"]);
    assert_eq!(a["answer"]["vertices"], 89);
    let (n, code) = json(&["gen", "setcover-nonmax", "--items", "3", "--sets", "1;1,2;2,3"]);
    assert_eq!(code, 0);
    assert!(n["answer"]["vertices"].as_u64() > a["answer"]["vertices"].as_u64());

    assert_eq!(run(&["gen", "vc", "--edges", ""]).status.code(), Some(2));
    assert_eq!(run(&["gen", "setcover", "--items", "3", "--sets", "1;2"]).status.code(), Some(2));
}

#[test]
fn dot_export() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "small.txt", SMALL);
    let dot = dir.path().join("r.dot");
    assert_eq!(run(&["distance", s(&p), "--dot", s(&dot)]).status.code(), Some(0));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));
    let p4 = file(&dir, "p4.txt", "p 4 3\ne 1 2\ne 2 3\ne 3 4\ns 2 3\nt 1 2\n");
    assert_eq!(run(&["distance", s(&p4), "--dot", s(&dot)]).status.code(), Some(4));
}

#[test]
fn human_output_lists_the_witness() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "small.txt", SMALL);
    let out = String::from_utf8(run(&["distance", s(&p), "--witness"]).stdout).unwrap();
    assert!(out.starts_with("distance: 4\nmethod: fpt\n"));
    assert_eq!(out.lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).count(), 4);
}
