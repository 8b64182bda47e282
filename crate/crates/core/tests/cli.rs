//! End-to-end runs of the `hidcor` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hidcor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hidcor")).args(args).output().expect("spawn hidcor")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const BELL: &str = r#"{"dim":4,"re":[[0.5,0,0,0.5],[0,0,0,0],[0,0,0,0],[0.5,0,0,0.5]]}"#;

#[test]
fn uniform_distribution_exits_zero() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p.csv", "0.25\n0.25\n0.25\n0.25\n");
    let out = hidcor(&["analyze-prob", "--input", s(&input), "--dims", "2,2", "--split", "1", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rep = stdout_json(&out);
    assert!(rep["results"]["mutual_info"].as_f64().unwrap().abs() < 1e-15);
    assert_eq!(rep["tool"], "hidcor");
}

#[test]
fn dims_must_match_length() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p.json", "[0.1,0.1,0.2,0.2,0.2,0.2]");
    let out = hidcor(&["analyze-prob", "--input", s(&input), "--dims", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension mismatch"));
}

#[test]
fn conditional_and_strong_subadditivity() {
    let dir = TempDir::new().unwrap();
    let p: Vec<String> = (1..=8).map(|k| format!("{}", k as f64 / 36.0)).collect();
    let input = write(&dir, "p.csv", &p.join("\n"));
    let out = hidcor(&["analyze-prob", "--input", s(&input), "--dims", "2,2,2", "--given", "1=2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rep = stdout_json(&out);
    let cond: Vec<f64> = serde_json::from_value(rep["results"]["conditional"]["distribution"].clone()).unwrap();
    assert!((cond.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    let ssa = &rep["results"]["strong_subadditivity"];
    assert!(ssa["lhs"].as_f64().unwrap() >= ssa["rhs"].as_f64().unwrap());
    let check = rep["checks"].as_array().unwrap().iter().find(|c| c["name"] == "strong_subadditivity").unwrap();
    assert_eq!(check["holds"], true);
}

#[test]
fn non_hermitian_matrix_is_rejected() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "rho.json", r#"{"dim":2,"re":[[0.5,0.3],[0.1,0.5]]}"#);
    let out = hidcor(&["analyze-dm", "--input", s(&input), "--dims", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotHermitian"));
}

#[test]
fn bell_state_report() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "bell.json", BELL);
    let out = hidcor(&["analyze-dm", "--input", s(&input), "--dims", "2,2", "--split", "1", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = &stdout_json(&out)["results"];
    assert!((r["mutual_information"].as_f64().unwrap() - 2.0 * std::f64::consts::LN_2).abs() < 1e-10);
    assert_eq!(r["separability"]["status"], "entangled");
    assert!((r["chsh_max"].as_f64().unwrap() - 2.0 * std::f64::consts::SQRT_2).abs() < 1e-9);
    assert_eq!(r["bell_violation"], true);
}

#[test]
fn report_written_to_out_file() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "bell.json", BELL);
    let dest = dir.path().join("report.json");
    let out = hidcor(&["analyze-dm", "--input", s(&input), "--dims", "2,2", "--out", s(&dest)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rep: Value = serde_json::from_str(&fs::read_to_string(&dest).unwrap()).unwrap();
    assert_eq!(rep["request"]["subcommand"], "analyze-dm");
}

#[test]
fn tomogram_sweep_emits_json_lines() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "bell.json", BELL);
    let grid = write(&dir, "grid.json", r#"[{"theta":0.0,"phi":0.0},{"theta":1.0,"phi":2.0},{"theta":3.0,"phi":0.5}]"#);
    let out = hidcor(&[
        "tomogram-sweep", "--input", s(&input), "--dims", "2,2", "--grid", s(&grid), "--q", "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    for (i, rec) in lines.iter().enumerate() {
        assert_eq!(rec["index"], i);
        let w: Vec<f64> = serde_json::from_value(rec["tomogram"].clone()).unwrap();
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        assert!(rec["mutual_information"].as_f64().unwrap() >= -1e-10);
    }
    let checks: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(checks.as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn fuzz_is_reproducible() {
    let a = hidcor(&["fuzz", "--seed", "11", "--count", "50"]);
    let b = hidcor(&["fuzz", "--seed", "11", "--count", "50"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let rep = stdout_json(&a);
    assert_eq!(rep["seed"], 11);
    assert!(rep["checks"].as_array().unwrap().iter().all(|c| c["holds"] == true));
}

#[test]
fn demo_matches_golden_report() {
    let golden = fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/demo_four_level.json")).unwrap();
    let out = hidcor(&["demo-four-level"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, golden);
}

#[test]
fn missing_input_is_a_usage_error() {
    let out = hidcor(&["analyze-prob", "--dims", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hidcor(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}
