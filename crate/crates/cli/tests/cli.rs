use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn srm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srm")).args(args).output().expect("run srm")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

#[test]
fn zeta_and_count() {
    let o = srm(&["zeta", "6", "8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "37");
    let o = srm(&["enumerate", "2", "2", "--count"]);
    assert_eq!(stdout(&o).trim(), "10");
    let o = srm(&["enumerate", "2", "2", "--count", "--plus"]);
    assert_eq!(stdout(&o).trim(), "9");
    let o = srm(&["--json", "zeta", "9", "11"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["zeta"], 76);
}

#[test]
fn validate_reports_first_violation() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.mat", "1 1\n-1\n");
    let o = srm(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 1 prefix sum -1 at (1,1)"));
    let good = write(&dir, "good.mat", "2 2\n0 1\n1 -1\n");
    assert!(srm(&["validate", good.to_str().unwrap()]).status.success());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(srm(&["zeta", "six", "8"]).status.code(), Some(2));
    assert_eq!(srm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(srm(&["enumerate", "2", "2", "--bogus"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one() {
    let o = srm(&["enumerate", "5", "5", "--count"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("nope.mat");
    assert_eq!(srm(&["validate", missing.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn eliminate_prints_steps() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.mat", "4 3\n0 1 1\n1 -1 0\n0 1 -1\n0 0 1\n");
    let o = srm(&["eliminate", a.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(&lines[..2], ["(1,2)x(1,2) +", "(1,3)x(2,3) +"]);
    assert_eq!(&lines[2..], ["4 3", "1 1 0", "0 0 0", "0 0 0", "0 0 1"]);
}

#[test]
fn bruhat_meet_and_hasse() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.mat", "0 1\n0 0\n");
    let d = write(&dir, "d.mat", "0 0\n1 0\n");
    let o = srm(&["bruhat", "meet", c.to_str().unwrap(), d.to_str().unwrap()]);
    assert_eq!(stdout(&o), "2 2\n0 1\n1 -1\n");
    let dot = dir.path().join("h.dot");
    let o = srm(&["hasse", "--m", "2", "--n", "2", "--plus", "--dot", dot.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph hasse {"));
    assert_eq!(text.matches("->").count(), 11);
}

#[test]
fn incidence_and_joint() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "4\n1 2\n2 3\n2 4\nloops: 3 4\n");
    let o = srm(&["incidence", g.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let cyc = write(&dir, "c.txt", "2\n1 2\n2 1\n");
    let o = srm(&["incidence", cyc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not orderable"));
    let o = srm(&["joint", "--r1", "1,0", "--s1", "1,0", "--r2", "0,1", "--s2", "0,1"]);
    assert_eq!(stdout(&o), "2 2\n1 0\n0 0\n2 2\n0 0\n0 1\n");
    let o = srm(&["joint", "--r1", "2,0", "--s1", "1,1", "--r2", "1,0", "--s2", "1,0"]);
    assert_eq!(stdout(&o).trim(), "none");
}

#[test]
fn polytope_check() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.mat", "2 2\n1/2 1/2\n1/2 -1/2\n");
    let o = srm(&["polytope", "--check", x.to_str().unwrap(), "--c", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "inside");
    let v = write(&dir, "v.mat", "0 1\n1 -1\n");
    let o = srm(&["polytope", "--check", v.to_str().unwrap(), "--c", "2"]);
    assert_eq!(stdout(&o).trim(), "inside, vertex");
    let o = srm(&["polytope", "--verify", "2", "2", "1"]);
    assert!(o.status.success());
}

#[test]
fn decompose_prints_terms() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "p.mat", "0 1\n1 -1\n");
    let o = srm(&["--json", "decompose", a.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v["terms"].as_array().unwrap().is_empty());
}
