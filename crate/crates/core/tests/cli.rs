//! End-to-end checks of the `ucycle` binary: output and exit codes.

use std::collections::BTreeMap;
use std::process::{Command, Output};

fn ucycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ucycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn window_counts(s: &str, n: usize) -> BTreeMap<String, usize> {
    let c: Vec<char> = s.chars().collect();
    let mut m = BTreeMap::new();
    for i in 0..c.len() {
        let w: String = (0..n).map(|j| c[(i + j) % c.len()]).collect();
        *m.entry(w).or_default() += 1;
    }
    m
}

#[test]
fn generate_noninjective() {
    let o = ucycle(&["generate", "--class", "noninjective", "-n", "3", "-k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let cycle = stdout(&o).trim().to_string();
    assert_eq!(cycle.len(), 21);
    assert_eq!(
        window_counts(&cycle, 3),
        window_counts("AAACACCCBBBAABABBCBCC", 3)
    );
}

#[test]
fn generate_de_bruijn_json() {
    let o = ucycle(&[
        "generate",
        "--class",
        "all_words",
        "-n",
        "3",
        "-k",
        "2",
        "--symbols",
        "01",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in [
        "class",
        "n",
        "k",
        "params",
        "length",
        "cycle",
        "verdict",
        "reasons",
        "degree_violations",
        "components",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["length"], 8);
    assert_eq!(v["start_vertex"], "00");
    let cycle = v["cycle"].as_str().unwrap();
    assert_eq!(window_counts(cycle, 3), window_counts("11101000", 3));
}

#[test]
fn generate_canonical_rotation() {
    let o = ucycle(&[
        "generate",
        "--class",
        "all_words",
        "-n",
        "3",
        "-k",
        "2",
        "--symbols",
        "01",
        "--canonical",
    ]);
    assert_eq!(stdout(&o), "00010111\n");
}

#[test]
fn generate_negative_is_exit_two() {
    let o = ucycle(&["generate", "--class", "illegal_ranking", "-n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("disconnected"));
    assert!(text.contains("nontrivial components: 2"));
    assert!(text.contains("112 121 211"));

    let o = ucycle(&[
        "generate",
        "--class",
        "alternating",
        "-n",
        "5",
        "--kv",
        "2",
        "--kc",
        "1",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], false);
    assert!(!v["degree_violations"].as_array().unwrap().is_empty());
    assert_eq!(v["params"]["kv"], 2);
}

#[test]
fn verify_exit_codes() {
    let base = ["verify", "--class", "noninjective", "-n", "3", "-k", "3"];
    let run = |cand: &str| {
        let mut args = base.to_vec();
        args.push(cand);
        ucycle(&args)
    };
    let o = run("AAACACCCBBBAABABBCBCC");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid\n");

    let o = run(&"AAACACCCBBBAABABBCBCC".repeat(2));
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("DuplicateWindow index=21"));

    let o = run("AAXC");
    assert_eq!(o.status.code(), Some(1));

    let o = ucycle(&[
        "verify",
        "--class",
        "all_words",
        "-n",
        "3",
        "-k",
        "2",
        "--symbols",
        "01",
        "11101000",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let o = ucycle(&[
        "verify",
        "--class",
        "all_words",
        "-n",
        "3",
        "-k",
        "2",
        "--symbols",
        "01",
        "--json",
        "11101001",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["defect"]["kind"], "DuplicateWindow");
    assert_eq!(v["defect"]["index"], 7);
    assert_eq!(v["defect"]["window"], "111");
}

#[test]
fn count_and_exists() {
    let o = ucycle(&["count", "--class", "illegal_ranking", "-n", "3"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "14\n".to_string()));

    let o = ucycle(&[
        "count",
        "--class",
        "nonpassword",
        "-n",
        "4",
        "--categories",
        "1,2,1",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let o = ucycle(&["exists", "--class", "nonsurjective", "-n", "5", "-k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("theorem: not_exists"));
    assert!(text.contains("engine: not_exists"));

    let o = ucycle(&[
        "exists",
        "--class",
        "alternating",
        "-n",
        "5",
        "--kv",
        "2",
        "--kc",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("theorem: exists"));
    assert!(text.contains("engine: exists"));

    let o = ucycle(&[
        "exists",
        "--class",
        "noninjective",
        "-n",
        "3",
        "-k",
        "4",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theorem"], "unsettled");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn graph_prints_dot() {
    let o = ucycle(&["graph", "--class", "all_words", "-n", "3", "-k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph "));
    assert_eq!(dot.matches("->").count(), 8);
    assert!(dot.contains("\"AB\" -> \"BA\" [label=\"ABA\"];"));
}

#[test]
fn usage_errors_are_exit_one() {
    for args in [
        &["generate", "--class", "nope", "-n", "3", "-k", "2"][..],
        &["generate", "--class", "all_words", "-n", "3"],
        &[
            "generate",
            "--class",
            "all_words",
            "-n",
            "9",
            "-k",
            "9",
            "--cap",
            "1000",
        ],
        &["generate", "--class", "all_words", "-n", "1", "-k", "3"],
        &[
            "count",
            "--class",
            "nonpassword",
            "-n",
            "3",
            "--categories",
            "1,0",
        ],
        &["frobnicate"],
    ] {
        assert_eq!(ucycle(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(ucycle(&["--help"]).status.code(), Some(0));
}
