use std::path::Path;
use std::process::{Command, Output};

fn bin(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudoramsey")).args(args).current_dir(cwd).output().unwrap()
}

fn code(args: &[&str], cwd: &Path) -> i32 {
    bin(args, cwd).status.code().unwrap()
}

fn stdout(args: &[&str], cwd: &Path) -> String {
    let o = bin(args, cwd);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn exit_status_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&["construct", "paley", "--q", "13", "--out", "p13.txt"], d), 0);
    assert_eq!(code(&["construct", "gq-incidence", "--q", "2", "--out", "gq2.txt"], d), 0);
    let matrix: &[(&[&str], i32)] = &[
        (&["frobnicate"], 2),
        (&[], 2),
        (&["construct", "paley", "--out", "x.txt"], 1),
        (&["construct", "paley", "--q", "7", "--out", "x.txt"], 1),
        (&["construct", "nonsense", "--q", "7", "--out", "x.txt"], 2),
        (&["alpha", "p13.txt"], 2),
        (&["alpha", "p13.txt", "--exact", "--lower", "--seed", "1"], 2),
        (&["alpha", "p13.txt", "--lower"], 2),
        (&["alpha", "p13.txt", "--lower", "--seed", "4"], 0),
        (&["alpha", "p13.txt", "--exact"], 0),
        (&["alpha", "missing.txt", "--exact"], 1),
        (&["block", "--host", "gq2.txt", "--out", "h.txt"], 2),
        (&["block", "--host", "p13.txt", "--seed", "1", "--out", "h.txt"], 1),
        (&["block", "--host", "gq2.txt", "--seed", "1", "--out", "h.txt"], 0),
        (&["sample", "p13.txt", "--forbid", "K4", "--t", "4", "--out", "s.json"], 2),
        (&["certify", "p13.txt", "--forbid", "K3", "--out", "c.json"], 1),
        (&["certify", "p13.txt", "--forbid", "K4", "--out", "c.json"], 0),
        (&["verify", "c.json"], 0),
        (&["verify", "missing.json"], 1),
        (&["free", "p13.txt", "--forbid", "K4"], 0),
        (&["free", "p13.txt", "--forbid", "Q9"], 1),
        (&["girth", "p13.txt"], 0),
        (&["spectrum", "p13.txt"], 0),
        (&["ndl", "p13.txt", "--s", "3,4"], 0),
        (&["lf", "--base", "K3"], 0),
        (&["ar-bound", "--n", "1000", "--d", "100", "--lambda", "10", "--t", "500"], 0),
        (&["ar-bound", "--n", "1000", "--d", "100", "--lambda", "0.25", "--t", "500"], 1),
        (&["feasibility", "--mode", "hexagon", "--hexagon-q", "32", "--t", "100"], 0),
        (&["feasibility", "--mode", "theorem5", "--m", "10", "--n", "8", "--d", "6", "--t", "4"], 0),
        (&["feasibility", "--mode", "theorem5", "--t", "4"], 1),
        (&["--version"], 0),
        (&["--help"], 0),
    ];
    for (args, expected) in matrix {
        assert_eq!(code(args, d), *expected, "{args:?}");
    }
}

#[test]
fn paley_report_echoes_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    stdout(&["construct", "paley", "--q", "13", "--out", "g"], d);
    let report = stdout(&["ndl", "g", "--s", "3"], d);
    assert!(report.contains("lambda: 2.302775638"), "{report}");
    assert!(report.contains("d: 6"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["ndl", "g", "--json"], d)).unwrap();
    assert!((json["report"]["lambda"].as_f64().unwrap() - (1.0 + 13f64.sqrt()) / 2.0).abs() < 1e-9);
}

#[test]
fn certificates_verify_in_a_fresh_process_and_tampering_fails() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    stdout(&["construct", "er-polarity", "--q", "7", "--out", "er7.txt"], d);
    let out = stdout(&["certify", "er7.txt", "--forbid", "C4", "--out", "c.json"], d);
    assert!(out.contains("claim: r(C4, 16) > 57"), "{out}");
    assert!(stdout(&["verify", "c.json"], d).contains("verified: true"));

    stdout(&["sample", "er7.txt", "--forbid", "C4", "--t", "7", "--seed", "3", "--out", "s.json"], d);
    assert_eq!(code(&["verify", "s.json"], d), 0);

    let text = std::fs::read_to_string(d.join("c.json")).unwrap();
    let tampered = text.replace("\"t\": 16", "\"t\": 17");
    assert_ne!(tampered, text);
    std::fs::write(d.join("bad.json"), tampered).unwrap();
    let o = bin(&["verify", "bad.json"], d);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("verified: false"));
}

#[test]
fn identical_commands_write_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for run in ["a", "b"] {
        stdout(&["construct", "gq-incidence", "--q", "3", "--out", &format!("gq-{run}.txt")], d);
        stdout(
            &["block", "--host", &format!("gq-{run}.txt"), "--seed", "9", "--out", &format!("h-{run}.txt"), "--partition-out", &format!("p-{run}.json")],
            d,
        );
        stdout(&["construct", "er-polarity", "--q", "8", "--out", &format!("er-{run}.txt")], d);
        stdout(
            &["sample", &format!("er-{run}.txt"), "--forbid", "C4", "--t", "8", "--seed", "21", "--out", &format!("s-{run}.json"), "--graph-out", &format!("sg-{run}.txt")],
            d,
        );
    }
    for stem in ["gq", "h", "p", "er", "s", "sg"] {
        let ext = if stem == "p" || stem == "s" { "json" } else { "txt" };
        let a = std::fs::read(d.join(format!("{stem}-a.{ext}"))).unwrap();
        let b = std::fs::read(d.join(format!("{stem}-b.{ext}"))).unwrap();
        assert_eq!(a, b, "{stem}");
    }
}

#[test]
fn lf_listing_counts_classes() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&["lf", "--base", "C5"], dir.path());
    assert!(out.contains("path partitions: 26"), "{out}");
    assert!(out.contains("isomorphism classes: 6"), "{out}");
}
