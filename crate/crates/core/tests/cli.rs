//! The command-line front end: outputs and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cascade-lab"))
        .args(args)
        .env_remove("CASCADE_LAB_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn analyze_sl7() {
    let o = run(&["analyze", "--type", "A", "--rank", "6", "--t", "2,6", "--oracle"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["index"], 6);
    assert_eq!(v["generic"], false);
    assert_eq!(v["witness"][1], serde_json::json!([0, 1, 0, 0, 0, 0]));
    assert_eq!(v["oracle"]["agrees"], true);
}

#[test]
fn analyze_e6() {
    let o = run(&["analyze", "--type", "E", "--rank", "6", "--t", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["dim"].as_u64(), v["index"].as_u64()), (Some(25), Some(13)));
}

#[test]
fn usage_errors_exit_2_and_name_the_field() {
    for (args, field) in [
        (vec!["analyze", "--type", "A", "--rank", "6", "--t", "9"], "--t"),
        (vec!["analyze", "--type", "Q", "--rank", "6", "--t", "1"], "--type"),
        (vec!["analyze", "--type", "E", "--rank", "5", "--t", "1"], "--rank"),
        (vec!["enumerate", "--type", "A", "--rank", "3", "--filter", "bogus"], "--filter"),
        (vec!["enumerate", "--type", "A", "--rank", "4", "--max-subsets", "10"], "--max-subsets"),
        (vec!["verify", "--type", "A", "--rank", "3", "--scope", "nope"], "--scope"),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(field), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn bad_seed_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_cascade-lab"))
        .args(["analyze", "--type", "A", "--rank", "3", "--t", "1", "--oracle"])
        .env("CASCADE_LAB_SEED", "forty-two")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("CASCADE_LAB_SEED"));
}

#[test]
fn enumerate_filters_and_formats() {
    let o = run(&["enumerate", "--type", "A", "--rank", "3", "--filter", "generic"]);
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 5);

    let o = run(&["enumerate", "--type", "C", "--rank", "4", "--filter", "generic", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 15);

    let o = run(&["enumerate", "--type", "G", "--rank", "2", "--filter", "quasi-quadratic"]);
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let ts: Vec<_> = v.iter().map(|r| r["t"].clone()).collect();
    assert_eq!(ts, vec![serde_json::json!([1])]);
}

#[test]
fn tables_is_enumerate_all_csv() {
    let a = run(&["tables", "--type", "B", "--rank", "3"]);
    let b = run(&["enumerate", "--type", "B", "--rank", "3", "--filter", "all", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 1 + 7);
}

#[test]
fn enumerate_to_file() {
    let path = std::env::temp_dir().join(format!("cascade-lab-cli-{}.json", std::process::id()));
    let o = run(&["enumerate", "--type", "A", "--rank", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.len(), 3);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn hasse_output() {
    let o = run(&["hasse", "--type", "E", "--rank", "7", "--format", "dot"]);
    let dot = stdout(&o);
    assert_eq!(dot.matches("[label=\"β_").count(), 7);
    assert_eq!(dot.matches(" -> ").count(), 6);
    assert!(dot.contains("phi=\"{α6}\""));

    let o = run(&["hasse", "--type", "A", "--rank", "1"]);
    assert_eq!(stdout(&o).lines().count(), 1);

    let o = run(&["hasse", "--type", "D", "--rank", "8", "--format", "dot"]);
    let dot = stdout(&o);
    for edge in ["b1 -> b2;", "b1 -> b3;", "b3 -> b4;", "b3 -> b5;", "b5 -> b6;", "b5 -> b7;", "b5 -> b8;"] {
        assert!(dot.contains(edge), "missing {edge}");
    }
}

#[test]
fn verify_passes() {
    let o = run(&["verify", "--type", "F", "--rank", "4", "--scope", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("15 nilradicals"));
    assert!(stdout(&o).contains("0 failed"));

    let o = run(&["verify", "--type", "B", "--rank", "2", "--scope", "cascade"]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["verify", "--type", "A", "--rank", "6", "--scope", "stabiliser"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("63 nilradicals"));
}
