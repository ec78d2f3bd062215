//! End-to-end checks of the `plumbline` binary.

use std::process::{Command, Output};

fn plumbline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plumbline"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = plumbline(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn zmin_corpus_golden() {
    let out = stdout(&["zmin", "corpus:ex-dimim"]);
    assert_eq!(out.trim(), "a=3, b=6, c=1, d=1, e=2");
    let js: serde_json::Value =
        serde_json::from_str(&stdout(&["zmin", "corpus:ex-dimim", "--json"])).unwrap();
    assert_eq!(js["b"], "6");
}

#[test]
fn wh_pg_golden() {
    assert_eq!(
        stdout(&["wh", "pg", "--seifert", "b0=1 legs=5,1x4"]).trim(),
        "4"
    );
    assert_eq!(
        stdout(&["wh", "pg", "--seifert", "b0=4 legs=8,1x8"]).trim(),
        "3"
    );
}

#[test]
fn si_dimim_golden() {
    assert_eq!(stdout(&["si", "dimim", "--d", "4", "--k", "3"]).trim(), "4");
}

#[test]
fn json_outputs_reparse() {
    for args in [
        vec!["invariants", "corpus:ex-445", "--json"],
        vec![
            "zcoh",
            "corpus:ex-dimim",
            "--lp",
            "a=0",
            "--z",
            "a=4,b=8,c=2,d=1,e=3",
            "--json",
        ],
        vec!["series", "corpus:a2", "--bound", "2,2", "--json"],
        vec!["wh", "invariants", "--seifert", "b0=1 legs=5,1x4", "--json"],
        vec![
            "abel",
            "rank",
            "--seifert",
            "b0=4 legs=8,1x8",
            "--jet",
            "9,3,1",
            "--json",
        ],
        vec!["si", "rank", "--d", "4", "--k", "2", "--json"],
        vec![
            "periodic-constant",
            "corpus:ex-445",
            "--l",
            "c=5,l1=1,l2=1,l3=1,l4=1",
            "--json",
        ],
        vec!["corpus", "--json"],
    ] {
        let text = stdout(&args);
        let v: Result<serde_json::Value, _> = serde_json::from_str(&text);
        assert!(v.is_ok(), "not JSON for {args:?}: {text}");
    }
}

#[test]
fn graph_file_and_stdin() {
    let dir = std::env::temp_dir().join("plumbline-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.graph");
    std::fs::write(&path, "vertex a -2\nvertex b -2\nedge a b\n").unwrap();
    let out = stdout(&["invariants", path.to_str().unwrap()]);
    assert!(out.contains("discriminant det(-M): 3"));
}

#[test]
fn domain_errors_exit_one() {
    let out = plumbline(&["invariants", "corpus:nope"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    // non-tree graph file
    let dir = std::env::temp_dir().join("plumbline-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.graph");
    std::fs::write(&path, "vertex a -1\nvertex b -1\nedge a b\n").unwrap();
    let out = plumbline(&["invariants", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotNegativeDefinite"));
    // usage errors exit 2
    let out = plumbline(&["zmin"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn abel_symbolic_quadric() {
    let text = stdout(&[
        "abel",
        "map",
        "--seifert",
        "b0=4 legs=8,1x8",
        "--jet",
        "2",
        "--symbolic",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let coords: Vec<String> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["coord"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(coords.len(), 3);
    // each coordinate carries the common factor -c1/prod(c0 - p_j) and a
    // power of c0; spot-check the numerators
    assert!(coords[0].contains("c1"));
    assert!(coords[1].contains("c0"));
}

#[test]
fn si_points_file() {
    let dir = std::env::temp_dir().join("plumbline-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pts.csv");
    // collinear triple on v = u^5
    std::fs::write(&path, "0,0\n1,1\n-1,-1\n").unwrap();
    let text = stdout(&[
        "si",
        "rank",
        "--d",
        "5",
        "--model",
        "graph",
        "--points-file",
        path.to_str().unwrap(),
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["rank"], 6);
    assert_eq!(v["h1"], 4);
}
