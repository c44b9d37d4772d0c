//! End-to-end checks of the installed binary: argument parsing, exit codes,
//! file output, environment overrides, and output determinism.

use std::process::{Command, Output};
use std::time::Instant;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cycpart"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn qtable_tsv_matches_golden() {
    let out = run(&["qtable", "6", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n\tcount\n0\t2\n1\t3\n2\t2\n3\t3\n4\t2\n5\t3\ntotal\t15\n"
    );
}

#[test]
fn qtable_json_round_trips() {
    let out = run(&["qtable", "64", "32", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(text.trim_end()).expect("json");
    assert_eq!(format!("{v}\n"), text, "re-serialization must be byte-identical");
    // counts stay exact as decimal strings even past u64
    assert_eq!(v["payload"]["total"], "1832624140942590534");
}

#[test]
fn prob_and_max_examples() {
    let out = run(&["prob", "6", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3\t3/15\n"));
    assert!(text.ends_with("best_guess\t1,3,5\n"));

    let out = run(&["max", "8", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("case\t3\n"));
    assert!(text.contains("witness_gcd\t2\n"));
}

#[test]
fn necklaces_list_and_count() {
    let out = run(&["necklaces", "4", "2", "--list"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "word\tfrequency\n0011\t1\n0101\t2\n");

    let out = run(&["necklaces", "8", "4", "--divides", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "count\t10\n");

    let out = run(&["necklaces", "4", "2"]);
    assert_eq!(out.status.code(), Some(1), "one of --divides/--list is required");

    let out = run(&["necklaces", "4", "2", "--list", "--divides", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn audit_and_fpoly_examples() {
    let out = run(&["audit", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with(
        "partition_total\t32\nnecklace_total\t36\nexcluded_total\t4\n"
    ));

    let out = run(&["fpoly", "6", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 -1 1 1 -1 1\n");
}

#[test]
fn verify_all_suite_completes_quickly() {
    let start = Instant::now();
    let out = run(&["verify", "--suite", "all", "--max-m", "12"]);
    let elapsed = start.elapsed();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.ends_with("result\tpass\n"));
    assert!(text.contains("ok\tsubset-sum-oracle\t"));
    assert!(text.contains("ok\tf-closed-points\t"));
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
}

#[test]
fn verify_bound_validation() {
    let out = run(&["verify", "--max-m", "0"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["verify", "--suite", "dft", "--max-m", "11"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["verify", "--suite", "oracle", "--max-m", "17"]);
    assert_eq!(out.status.code(), Some(1), "default oracle cap is 16");

    // the env override raises (and lowers) the oracle cap, clamped to 30
    let out = bin()
        .args(["verify", "--suite", "oracle", "--max-m", "9"])
        .env("CYCPART_MAX_ORACLE_M", "8")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));

    let out = bin()
        .args(["verify", "--suite", "oracle", "--max-m", "17"])
        .env("CYCPART_MAX_ORACLE_M", "17")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .args(["verify", "--suite", "oracle", "--max-m", "4"])
        .env("CYCPART_MAX_ORACLE_M", "banana")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn diagram_svg_written_to_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("wall.svg");
    let out = run(&[
        "diagram",
        "6",
        "3",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let svg = std::fs::read_to_string(&path).expect("svg written");
    assert!(svg.starts_with("<?xml version=\"1.0\""));
    assert!(svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("<rect").count(), 20, "C(6,3) unit squares");
}

#[test]
fn unwritable_out_path_is_io_error() {
    let out = run(&["qtable", "6", "2", "--out", "/nonexistent-dir/q.tsv"]);
    assert_eq!(out.status.code(), Some(3));
}
