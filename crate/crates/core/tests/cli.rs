//! Exit codes, output destinations and determinism of `expsub-audit`.

use std::process::{Command, Output};

use expsub::audit::{ComparisonRecord, CSV_HEADER};

fn audit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expsub-audit"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn good_eval_exits_zero() {
    let out = audit(&[
        "eval",
        "beta_eq23",
        "--x",
        "0.3",
        "--y",
        "1.2",
        "--n",
        "1",
        "--no-timing",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], CSV_HEADER);
    assert!(lines[1].starts_with("beta_eq23,x=0.3+0.0i;y=1.2+0.0i;n=1.0+0.0i,"));
}

#[test]
fn configuration_errors_exit_three() {
    for args in [
        &["audit", "no_such_function"][..],
        &["audit", "zeta_eq5", "--bogus"],
        &[
            "eval",
            "beta_eq23",
            "--x",
            "0.3,0.4",
            "--y",
            "1.2",
            "--n",
            "1",
        ],
        &["eval", "igamma_eq14", "--s-re", "2", "--x", "1", "--n", "1"],
        &["audit", "zeta_eq5", "--format", "xml"],
        &["audit", "zeta_eq5", "--out", "/nonexistent-dir/r.csv"],
    ] {
        assert_eq!(audit(args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn closure_failure_exits_two() {
    let out = audit(&["audit", "phi_eq21", "--no-timing"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeta.json");
    let out = audit(&[
        "audit",
        "zeta_eq5",
        "--format",
        "json",
        "--no-timing",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let records: Vec<ComparisonRecord> =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(records.len(), 12);
    assert!(records.iter().all(|r| r.passed() && r.elapsed_ms == 0.0));
}

#[test]
fn full_audit_is_deterministic() {
    let a = audit(&["audit", "all", "--no-timing"]);
    let b = audit(&["all", "--no-timing"]);
    assert_eq!(a.status.code(), b.status.code());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn blackbody_prints_one_number() {
    let out = audit(&["blackbody", "--x", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let v: f64 = String::from_utf8(out.stdout)
        .unwrap()
        .trim()
        .parse()
        .unwrap();
    assert!((v - 1.0).abs() < 1e-14);
}
