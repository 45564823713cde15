use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use spectra_core::families::{friendship, split_star_plus};
use spectra_core::graph6;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(args)
        .env_remove("SPECTRA_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn spectra");
    // commands that fail on their arguments exit without reading stdin
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn construct_friendship_graph6() {
    let o = run(
        &[
            "construct",
            "--family",
            "friendship",
            "--n",
            "7",
            "--out",
            "graph6",
        ],
        "",
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), graph6::encode(&friendship(7).unwrap()));
}

#[test]
fn construct_json_and_parameter_errors() {
    let o = run(
        &[
            "construct",
            "--family",
            "split-star-plus",
            "--n",
            "6",
            "--k",
            "1",
            "--out",
            "json",
        ],
        "",
    );
    let v = &json_lines(&o)[0];
    assert_eq!(v["m"], 6);
    assert_eq!(v["graph6"], graph6::encode(&split_star_plus(6, 1).unwrap()));
    let o = run(&["construct", "--family", "split-star", "--n", "6"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = run(
        &["construct", "--family", "h-graph", "--n", "6", "--k", "4"],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["construct", "--family", "nope", "--n", "6"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spectrum_of_f5() {
    let input = graph6::encode(&friendship(5).unwrap()) + "\n";
    let o = run(&["spectrum"], &input);
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert!(lines[0].get("meta").is_some());
    let v = &lines[1];
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 6);
    assert!((v["q"].as_f64().unwrap() - 5.5615528).abs() < 1e-7);
    assert!(v["residual"].as_f64().unwrap() <= 1e-10);
    assert_eq!(v["bound_lemma24"], 6.0);
    assert_eq!(v["bound_lemma25"], 6.0);
}

#[test]
fn malformed_lines_are_reported_and_skipped() {
    let o = run(&["--no-header", "spectrum"], "C~\nnot graph6\nB@\nA_\n");
    assert_eq!(o.status.code(), Some(2));
    let lines = json_lines(&o);
    assert_eq!(
        lines
            .iter()
            .map(|v| v["line"].as_u64().unwrap())
            .collect::<Vec<_>>(),
        [1, 4]
    );
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2:") && err.contains("line 3:"), "{err}");
}

#[test]
fn check_free_with_witness() {
    let input = format!("C~\n{}\n", graph6::encode(&split_star_plus(7, 1).unwrap()));
    let o = run(
        &[
            "--no-header",
            "check-free",
            "--free",
            "theta-1-2-2,f5",
            "--witness",
        ],
        &input,
    );
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert_eq!(lines[0]["free"], false);
    assert_eq!(lines[0]["contains"][0]["pattern"], "theta-1-2-2");
    assert_eq!(
        lines[0]["contains"][0]["embedding"]
            .as_array()
            .unwrap()
            .len(),
        4
    );
    assert_eq!(lines[1]["free"], true);
    let o = run(&["check-free", "--free", "k4"], "C~\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_commands() {
    let o = run(&["verify", "--theorem", "1.4", "--n", "6"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["report"]["unique"], true);

    let o = run(&["verify", "--lemma", "2.3", "--n", "6", "--k", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["max_edges"], 6);

    let o = run(&["verify", "--lemma", "2.6", "--n", "7", "--k", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--lemma", "2.4", "--n", "5"], "");
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["verify", "--theorem", "1.2", "--n", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["pass"].is_null());

    for bad in [
        &["verify", "--theorem", "9.9", "--n", "6"][..],
        &["verify", "--theorem", "1.2", "--n", "9"],
        &["verify", "--lemma", "2.3", "--n", "6"],
        &["verify", "--n", "6"],
    ] {
        assert_eq!(run(bad, "").status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn bounds_report_csv() {
    let o = run(&["bounds-report", "--n-min", "4", "--n-max", "40"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with('#'));
    let cols: Vec<&str> = lines.next().unwrap().split(',').collect();
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 37);
    let col = |name: &str| cols.iter().position(|c| *c == name).unwrap();
    let five = &rows[1];
    let f5: f64 = five[col("friendship_closed")].parse().unwrap();
    assert!((f5 - (7.0 + 17f64.sqrt()) / 2.0).abs() < 1e-12);
    assert_eq!(rows[2][col("split_star_plus1_bracket")], "true");
    for r in &rows {
        for fam in ["friendship", "split_star2", "split_star_plus1"] {
            let q: f64 = r[col(&format!("{fam}_q"))].parse().unwrap();
            let p: f64 = r[col(&format!("{fam}_pressure"))].parse().unwrap();
            let d: f64 = r[col(&format!("{fam}_das"))].parse().unwrap();
            assert!(q <= p + 1e-9 && p <= d);
        }
    }
    assert_eq!(
        run(&["bounds-report", "--n-min", "3"], "").status.code(),
        Some(2)
    );
}

#[test]
fn output_is_reproducible() {
    let a = run(
        &[
            "bounds-report",
            "--no-header",
            "--out",
            "json",
            "--n-max",
            "12",
        ],
        "",
    );
    let b = run(
        &[
            "bounds-report",
            "--no-header",
            "--out",
            "json",
            "--n-max",
            "12",
        ],
        "",
    );
    assert_eq!(a.stdout, b.stdout);
    let input = "C~\nDQc\nE?Fw\n";
    assert_eq!(
        run(&["spectrum"], input).stdout,
        run(&["spectrum"], input).stdout
    );
    let o = run(
        &["--jobs", "2", "verify", "--theorem", "1.3", "--n", "7"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
}
