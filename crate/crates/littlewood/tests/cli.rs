//! End-to-end tests of the `littlewood` binary: exit codes, output shape,
//! report determinism.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_littlewood"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn partition_statistics_output() {
    let out = run(&["partition", "6,4,3,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("b(λ)           3"));
    assert!(text.contains("b(λ')          2"));
    assert!(text.contains("2-core         () (empty: true)"));
}

#[test]
fn partition_nonempty_core_and_json() {
    let out = run(&["partition", "2,1,1,1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["b"], 0);
    assert_eq!(doc["empty_two_core"], false);
}

#[test]
fn empty_partition_is_accepted() {
    let out = run(&["partition", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("partition      ()"));
}

#[test]
fn malformed_partition_is_usage_error() {
    let out = run(&["partition", "1,2,x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_commands() {
    let out = run(&["eval", "pf1", "--lambda", "2", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(q) / (1 + q + q^2)");

    let out = run(&["eval", "int1", "--lambda", "1,1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");

    let out = run(&[
        "eval", "integral", "--lambda", "1", "--n", "1", "--family", "I_qq", "--q-order", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0 + O(q^9)");

    // precondition violations exit 2
    let out = run(&["eval", "int1", "--lambda", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["eval", "pf1", "--lambda", "1,1,1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["eval", "integral", "--lambda", "1", "--family", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_identity_instance_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args([
            "verify",
            "--identity",
            "L1",
            "--vars",
            "2",
            "--x-degree",
            "4",
            "--q-order",
            "12",
        ])
        .env("LITTLEWOOD_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("| L1 |"));
}

#[test]
fn verify_unknown_identity_is_usage_error() {
    let out = run(&["verify", "--identity", "NOPE"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("a.json");
    let report2 = dir.path().join("b.json");
    let cache = dir.path().join("cache");
    for (out, i) in [(&report, 0), (&report2, 1)] {
        let status = bin()
            .args([
                "verify",
                "--identity",
                "LEMMA_21",
                "--identity",
                "B1",
                "--max-size",
                "6",
                "--m",
                "1",
                "--q-order",
                "8",
                "--format",
                "json",
                "--out",
                out.to_str().unwrap(),
                "--cache-dir",
                cache.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0), "run {i}");
    }
    let a = std::fs::read(&report).unwrap();
    let b = std::fs::read(&report2).unwrap();
    assert_eq!(a, b, "reports must be byte-identical across runs");
}

#[test]
fn cache_info_and_clear() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let status = bin()
        .args([
            "verify",
            "--identity",
            "B1",
            "--m",
            "1",
            "--vars",
            "1",
            "--q-order",
            "6",
            "--cache-dir",
            cache.to_str().unwrap(),
        ])
        .stdout(std::process::Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));

    let out = run(&["cache", "info", "--cache-dir", cache.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let records: usize = text
        .lines()
        .find_map(|l| l.strip_prefix("records: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(records >= 1, "verify should have populated the cache");

    let out = run(&["cache", "clear", "--cache-dir", cache.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["cache", "info", "--cache-dir", cache.to_str().unwrap()]);
    assert!(stdout(&out).contains("records: 0"));
}

#[test]
fn verify_list_prints_catalogue() {
    let out = run(&["verify", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for id in ["L1", "L2", "COR", "B1", "B2", "KAWANAKA", "PROP_COEF"] {
        assert!(text.lines().any(|l| l == id), "missing {id}");
    }
    assert!(text.lines().count() >= 15);
}
