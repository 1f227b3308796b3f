use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use tempfile::TempDir;

fn recolor(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recolor"))
        .current_dir(dir)
        .env_remove("RECOLOR_BUDGET")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn c6_mixing_threshold() {
    let dir = TempDir::new().unwrap();
    assert!(recolor(dir.path(), &["generate", "--name", "cycle", "--param", "6", "--out", "c6.txt"]).status.success());
    let o = recolor(dir.path(), &["--json", "mixing", "c6.txt", "--ell-max", "4"]);
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = report["entries"].as_array().unwrap();
    let at = |ell: u64| entries.iter().find(|e| e["ell"] == ell).unwrap();
    assert_eq!(at(3)["connected"], false);
    assert_eq!(at(3)["witness"]["type"], "frozen");
    assert_eq!(at(4)["connected"], true);
    assert_eq!(at(4)["colorings"], 732);
}

#[test]
fn frozen_family_is_checked_quickly() {
    let dir = TempDir::new().unwrap();
    let gen = recolor(
        dir.path(),
        &["generate", "--name", "frozen-family", "--param", "1", "--out", "f.txt", "--coloring-out", "f.col"],
    );
    assert!(gen.status.success());
    let t = Instant::now();
    let o = recolor(dir.path(), &["frozen", "f.txt", "--ell", "8", "--coloring", "f.col"]);
    assert!(t.elapsed() < Duration::from_secs(5));
    assert!(o.status.success());
    assert!(stdout(&o).contains("frozen: true"));
}

#[test]
fn certify_p4() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let o = recolor(dir.path(), &["certify", "p4.txt"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("dominated_vertex"));
    assert!(text.contains("(valid)"));
}

#[test]
fn constructive_path_passes_verification() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    write(dir.path(), "a.col", "1 2 1 2\n");
    write(dir.path(), "b.col", "2 1 2 1\n");
    let o = recolor(
        dir.path(),
        &["path", "p4.txt", "--from", "a.col", "--to", "b.col", "--ell", "3", "--constructive", "--out", "p.json"],
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = recolor(dir.path(), &["verify-path", "p4.txt", "--path", "p.json"]);
    assert!(v.status.success());
    assert!(stdout(&v).contains("valid: true"));
    assert!(stdout(&v).contains("end: 2 1 2 1"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "bad.txt", "3 1\n0 7\n");
    assert_eq!(recolor(dir.path(), &["info", "bad.txt"]).status.code(), Some(2));
    assert_eq!(recolor(dir.path(), &["bogus"]).status.code(), Some(2));

    write(dir.path(), "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    // An induced P4 means C5 is not P4-free.
    assert_eq!(recolor(dir.path(), &["free", "c5.txt", "--family", "p4"]).status.code(), Some(3));
    assert_eq!(recolor(dir.path(), &["frozen", "c5.txt", "--ell", "2"]).status.code(), Some(4));
}

#[test]
fn dimacs_input() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "k3.col", "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let o = recolor(dir.path(), &["--json", "info", "k3.col"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["m"], 3);
}

#[test]
fn classify_reports_exceptional_even_cycle() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let o = recolor(dir.path(), &["--json", "classify", "c6.txt", "--theorem", "triangle-claw"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "exceptional");
}
