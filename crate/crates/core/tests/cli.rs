use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn msgeo(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_msgeo"))
        .args(args)
        .env_remove("MSGEO_TOLERANCE")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s.trim()).unwrap_or_else(|e| panic!("{e}: {s:?}"))
}

struct Files {
    _dir: tempfile::TempDir,
    two3: String,
    two5: String,
    line: String,
    bad: String,
    path: String,
    hexagon: String,
    k22: String,
}

fn files() -> Files {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let s = |p: PathBuf| p.to_string_lossy().into_owned();
    Files {
        two3: s(write(d, "two3.json", r#"{"matrix": [[0, 3], [3, 0]]}"#)),
        two5: s(write(d, "two5.json", r#"{"labels": ["p", "q"], "matrix": [[0, 5], [5, 0]]}"#)),
        line: s(write(d, "line.json", r#"{"metric": "euclidean", "points": [[0], [1], [3], [7]]}"#)),
        bad: s(write(d, "bad.json", r#"{"matrix": [[0, 1], [2, 0]]}"#)),
        path: s(write(d, "path.json", r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#)),
        hexagon: s(write(
            d,
            "c6.json",
            r#"{"p": 3, "q": 3, "edges": [[0,0],[0,1],[1,1],[1,2],[2,2],[2,0]]}"#,
        )),
        k22: s(write(d, "k22.json", r#"{"p": 2, "q": 2, "edges": [[0,0],[0,1],[1,0],[1,1]]}"#)),
        _dir: dir,
    }
}

#[test]
fn gh_between_two_point_spaces() {
    let f = files();
    let (code, out, _) = msgeo(&["gh", "--x", &f.two3, "--y", &f.two5, "--witness"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["distance"], 1.0);
    assert_eq!(v["witness"], json("[[0,0],[1,1]]"));
}

#[test]
fn validate_reports_asymmetry() {
    let f = files();
    let (code, out, err) = msgeo(&["validate", &f.bad]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert_eq!(json(&err)["error"], "AsymmetricAt");
    let (code, out, _) = msgeo(&["validate", &f.line]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["diameter"], 7.0);
}

#[test]
fn spectrum_methods() {
    let f = files();
    for (method, extra) in [("edges", None), ("partitions", None), ("gh", Some("14"))] {
        let mut args = vec!["mst-spectrum", "--space", &f.line, "--method", method];
        if let Some(l) = extra {
            args.extend(["--lambda", l]);
        }
        let (code, out, _) = msgeo(&args);
        assert_eq!(code, 0, "{method}");
        assert_eq!(json(&out)["spectrum"], json("[4.0, 2.0, 1.0]"), "{method}");
    }
    let (code, _, err) = msgeo(&["mst-spectrum", "--space", &f.line, "--method", "gh", "--lambda", "3"]);
    assert_eq!(code, 1);
    assert_eq!(json(&err)["error"], "LambdaTooSmall");
}

#[test]
fn remaining_subcommands() {
    let f = files();
    let run = |args: &[&str]| {
        let (code, out, err) = msgeo(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        json(&out)
    };
    assert_eq!(run(&["hausdorff", "--space", &f.line, "--a", "0,1", "--b", "3"])["value"], 7.0);
    let c = run(&["count-sposition", "--space", &f.line, "--a", "0", "--b", "3", "--s", "3"]);
    assert_eq!(c["count"], 1);
    assert_eq!(run(&["gh-simplex", "--x", &f.line, "--m", "1", "--lambda", "2"])["distance"], 3.5);
    let mid = run(&["interpolate", "--x", &f.two3, "--y", &f.two5, "--t", "0.5"]);
    assert_eq!(mid["matrix"][0][1], 4.0);
    assert_eq!(run(&["mst", "--space", &f.line])["length"], 7.0);
    for method in ["supersets", "networks"] {
        let s = run(&["steiner", "--space", &f.line, "--m", "0,3", "--method", method]);
        assert_eq!(s["length"], 7.0);
    }
    assert_eq!(run(&["borsuk", "--space", &f.line, "--m", "2"])["partitionable"], true);
    assert_eq!(run(&["clique-cover", "--graph", &f.path])["value"], 2);
    assert_eq!(run(&["chromatic", "--graph", &f.path, "--a", "1", "--b", "1.5"])["value"], 2);
    assert_eq!(run(&["edge-covers", "--bipartite", &f.hexagon])["count"], 18);
    let cloud = run(&["realize-config", "--bipartite", &f.k22]);
    assert_eq!(cloud["metric"], "euclidean");
    assert_eq!(cloud["points"].as_array().unwrap().len(), 4);
}

#[test]
fn realized_cloud_reloads_as_a_space() {
    let f = files();
    let (_, out, _) = msgeo(&["realize-config", "--bipartite", &f.k22]);
    let dir = tempfile::tempdir().unwrap();
    let cloud = write(dir.path(), "cloud.json", &out);
    let (code, out, _) = msgeo(&["hausdorff", "--space", cloud.to_str().unwrap(), "--a", "0,1", "--b", "2,3"]);
    assert_eq!(code, 0);
    let v = json(&out)["value"].as_f64().unwrap();
    assert!((v - std::f64::consts::SQRT_2).abs() < 1e-11);
}

#[test]
fn usage_errors_exit_two() {
    let f = files();
    for args in [
        vec!["gh", "--x", &f.two3],
        vec!["frobnicate"],
        vec!["selftest", "--scale", "huge"],
        vec!["hausdorff", "--space", &f.line, "--a", "x", "--b", "1"],
        vec!["gh", "--x", &f.two3, "--y", &f.two5, "--colour"],
    ] {
        let (code, _, err) = msgeo(&args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(json(&err)["error"], "UsageError");
    }
}

#[test]
fn missing_and_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    let junk = write(dir.path(), "junk.json", "{not json");
    let (code, _, err) = msgeo(&["validate", junk.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(json(&err)["error"], "ParseError");
    let (code, _, err) = msgeo(&["validate", "/no/such/file.json"]);
    assert_eq!(code, 1);
    assert_eq!(json(&err)["error"], "FileNotFound");
}

#[test]
fn tolerance_env_var() {
    let dir = tempfile::tempdir().unwrap();
    // violates the triangle inequality by 1e-6
    let near = write(
        dir.path(),
        "near.json",
        r#"{"matrix": [[0, 1, 2.000001], [1, 0, 1], [2.000001, 1, 0]]}"#,
    );
    let p = near.to_str().unwrap();
    let (code, _, err) = msgeo(&["validate", p]);
    assert_eq!(code, 1);
    assert_eq!(json(&err)["error"], "TriangleViolation");
    let out = Command::new(env!("CARGO_BIN_EXE_msgeo"))
        .args(["validate", p])
        .env("MSGEO_TOLERANCE", "1e-5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let f = files();
    let args = ["gh", "--x", &f.line, "--y", &f.two5, "--witness"];
    assert_eq!(msgeo(&args), msgeo(&args));
    let a = msgeo(&["selftest", "--seed", "3", "--jobs", "1"]);
    let b = msgeo(&["selftest", "--seed", "3", "--jobs", "4"]);
    assert_eq!(a.0, 0, "{}", a.2);
    assert_eq!(a, b);
    assert_eq!(json(&a.1)["pass"], true);
}

#[test]
fn run_with_captures_output() {
    let f = files();
    let argv: Vec<String> = ["msgeo", "gh", "--x", &f.two3, "--y", &f.two5]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(msgeo::cli::run_with(&argv, &mut out, &mut err), 0);
    assert_eq!(String::from_utf8(out).unwrap().trim(), r#"{"distance":1.0}"#);
    assert!(err.is_empty());
}
