use std::fs;
use std::process::{Command, Output};

fn kpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpath")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn run_reports() {
    let out = kpath(&["run", "tight27", "--algo", "approx3", "--init", "tight27-alg", "--oracle"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["path_count"], 13);
    assert_eq!(v["oracle_path_count"], 9);
    assert_eq!(v["ratio"]["num"], 13);
    assert_eq!(v["ratio"]["den"], 9);
    assert_eq!(v["ratio"]["decimal"], "1.444444");
    assert!(v.get("elapsed_ms").is_none());

    let v = json(&kpath(&["run", "path7", "--algo", "approx1", "--k", "3", "--oracle"]));
    assert_eq!(v["num_singletons"], 0);
    assert_eq!(v["path_count"], 3);
    assert_eq!(v["oracle_method"], "exact");
    let v = json(&kpath(&["run", "empty4", "--algo", "approx1", "--k", "3"]));
    assert_eq!(v["path_count"], 4);
    assert!(v.get("ratio").is_none());
    let v = json(&kpath(&["run", "cycle9", "--algo", "approx2", "--timing"]));
    assert_eq!(v["k"], 7);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 1\n0 0\n").unwrap();
    let code = |args: &[&str]| kpath(args).status.code();
    assert_eq!(code(&["run", bad.to_str().unwrap(), "--algo", "approx1"]), Some(2));
    assert_eq!(code(&["run", "no-such-file", "--algo", "approx1"]), Some(2));
    assert_eq!(code(&["run", "path5", "--algo", "nope"]), Some(2));
    assert_eq!(code(&["run", "path9", "--algo", "approx2", "--k", "6"]), Some(3));
    assert_eq!(code(&["run", "path9", "--algo", "approx3", "--k", "4"]), Some(3));
    assert_eq!(code(&["run", "path40", "--algo", "approx1", "--oracle"]), Some(4));
    assert_eq!(code(&["oracle", "path20", "--k", "3"]), Some(4));
    assert_eq!(code(&["oracle", "path20", "--k", "3", "--max-n", "20"]), Some(0));
    assert_eq!(code(&["sweep", "--n-range", "5..7", "--seeds", "5", "--algo", "approx1", "--assert-ratio", "1/2"]), Some(1));
    assert_eq!(code(&["gen", "--family", "disjoint_two_cycles", "--n", "5"]), Some(2));
}

#[test]
fn verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let p = dir.path().join("p.json");
    let (gs, ps) = (g.to_str().unwrap(), p.to_str().unwrap());
    assert!(kpath(&["gen", "--family", "bidirected_random", "--n", "10", "--edge-prob", "0.3", "--seed", "5", "-o", gs]).status.success());
    assert!(kpath(&["run", gs, "--algo", "approx1", "--k", "4", "--out", "partition", "-o", ps]).status.success());
    let out = kpath(&["verify", gs, ps]);
    assert!(out.status.success());
    assert_eq!(json(&out)["ok"], true);
    let out = kpath(&["verify", gs, ps, "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["ok"], false);
    assert_eq!(kpath(&["verify", "tight27", "tight27-opt"]).status.code(), Some(0));
}

#[test]
fn sweep_and_dot() {
    let out = kpath(&["sweep", "--n-range", "2..6", "--seeds", "3", "--edge-prob", "0.2,0.4", "--algo", "approx1", "--k", "4", "--assert-ratio", "auto", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["instances"], 30);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["assert_ratio"]["num"], 2);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!((rows[0]["n"].as_u64(), rows[0]["seed"].as_u64()), (Some(2), Some(0)));

    let out = kpath(&["run", "path4", "--algo", "approx1", "--k", "2", "--out", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("0 -> 1 [color=blue"));
    assert!(dot.contains("1 -> 2 [color=gray"));
}

#[test]
fn debug_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("dbg");
    assert!(kpath(&["run", "twocycles8", "--algo", "approx2", "--debug-dir", d.to_str().unwrap()]).status.success());
    for f in ["approx2_trace.json", "cover.dot", "g1.dot", "m.dot", "g2.dot", "g3.dot"] {
        assert!(d.join(f).exists(), "{f}");
    }
    let trace: serde_json::Value = serde_json::from_str(&fs::read_to_string(d.join("approx2_trace.json")).unwrap()).unwrap();
    assert_eq!(trace["forest"]["isolated_two_cycles"].as_array().unwrap().len(), 4);
}
