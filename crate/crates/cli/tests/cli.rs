use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powergraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decompose_worked_example() {
    let o = run(&["decompose", "prod:zn:9xzn:3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("K1 v ((K2 v 3*K6) + 3*K2)"));
    assert!(
        out.contains("x^1 (x-27)^1 (x-21)^2 (x-9)^15 (x-3)^5 (x-1)^3"),
        "{out}"
    );
}

#[test]
fn spectrum_text_and_json() {
    let o = run(&["spectrum", "zn:8", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("x^1 (x-8)^7"), "{out}");
    assert!(out.contains("( 8  0 )\n( 7  1 )"), "{out}");

    let o = run(&["spectrum", "--group", "qn:2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["spectrum"]["exact"],
        serde_json::json!([[8, 2], [4, 3], [2, 2], [0, 1]])
    );
    assert_eq!(v["algebraic_connectivity"], 2);
    assert_eq!(
        run(&["spectrum", "--group", "qn:2", "--format", "json"]).stdout,
        o.stdout
    );
}

#[test]
fn spectrum_from_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z4.txt");
    std::fs::write(&path, "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n").unwrap();
    let o = run(&[
        "spectrum",
        "--table",
        path.to_str().unwrap(),
        "--format",
        "tsv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "eigenvalue\tmultiplicity\n4\t3\n0\t1\n");
}

#[test]
fn scan_tsv_rows() {
    let o = run(&["scan", "--max", "50", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 49);
    for row in rows {
        let f: Vec<&str> = row.split('\t').collect();
        assert!(f[1] == f[2] && f[2] == f[3], "{row}");
    }
}

#[test]
fn verify_all_exits_zero() {
    let o = run(&[
        "verify",
        "--all",
        "--cyclic-max",
        "100",
        "--dicyclic-max",
        "16",
        "--pgroup-max",
        "128",
    ]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_single_theorem_json() {
    let o = run(&[
        "verify",
        "--theorem",
        "cyclic-kappa-mu",
        "--max",
        "12",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total"], 11);
    assert_eq!(v["reports"][4]["params"]["n"], 6);
    assert_eq!(v["reports"][4]["evidence"]["kappa"], 3);
}

#[test]
fn info_reports_structure() {
    let o = run(&["info", "gq:2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["p_group"], 2);
    assert_eq!(v["generalized_quaternion"], true);
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["elements"].as_array().unwrap().len(), 8);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["spectrum", "zn:0"],
        vec!["spectrum", "bogus"],
        vec!["spectrum"],
        vec!["decompose", "zn:6"],
        vec!["verify"],
        vec!["verify", "--theorem", "nope"],
        vec!["verify", "--all", "--cyclic-max", "1"],
        vec!["scan", "--max", "1"],
        vec!["frobnicate"],
        vec!["spectrum", "zn:4", "--format", "xml"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = run(&["verify", "--all", "--cyclic-max", "1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--cyclic-max"));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
