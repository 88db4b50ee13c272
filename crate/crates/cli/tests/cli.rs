use std::io::Write;
use std::process::{Command, Output, Stdio};

fn comply(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comply"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn grundy_prints_the_value() {
    let out = comply(&["grundy", "--set", "k=2", "--n", "7", "--side", "comp"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5\n");

    let out = comply(&[
        "grundy",
        "--set",
        "set:8,21,34,47",
        "--n",
        "0",
        "--side",
        "base",
    ]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn grundy_verbose_lists_winning_moves() {
    let out = comply(&["grundy", "--set", "k=2", "--n", "3", "--side", "comp", "-v"]);
    let text = stdout(&out);
    assert!(text.starts_with("1\n"), "{text}");
    assert!(text.contains("winning: take 3"), "{text}");
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(
        comply(&["grundy", "--set", "k=0", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        comply(&["grundy", "--set", "k=x", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(comply(&["grundy", "--set", "k=2"]).status.code(), Some(2));
    assert_eq!(
        comply(&["verify", "--set", "set:1,4", "--nmax", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        comply(&["verify", "--set", "arith:4,6,1", "--nmax", "200"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn state_ceiling_exits_3() {
    let out = comply(&[
        "table",
        "--set",
        "k=3",
        "--nmax",
        "1000",
        "--state-ceiling",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table_formats() {
    let out = comply(&["table", "--set", "k=1", "--nmax", "3", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "n,G_base,G_complement\n0,0,0\n1,1,0\n2,2,1\n3,0,2\n"
    );

    let out = comply(&[
        "table",
        "--set",
        "arith:8,13,3",
        "--nmax",
        "120",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["predicted_period"], 55);
    assert_eq!(v["base"].as_array().unwrap().len(), 121);

    let out = comply(&["table", "--set", "arith:8,13,3", "--nmax", "120"]);
    let text = stdout(&out);
    assert!(text.contains("block width p = 55"), "{text}");
    assert!(text.contains("l=2 S'"), "{text}");
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("comply-cli-{}.csv", std::process::id()));
    let out = comply(&[
        "table",
        "--set",
        "k=2",
        "--nmax",
        "9",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn verify_reports() {
    let out = comply(&["verify", "--set", "k=5", "--nmax", "2000"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("PASS\n"));

    let out = comply(&["verify", "--set", "k=1", "--nmax", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["comparisons"], 2);
    assert_eq!(v["passed"], true);

    let out = comply(&[
        "verify",
        "--set",
        "arith:8,13,3",
        "--nmax",
        "550",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["predicted_period"], 55);
    assert_eq!(v["theorem_3_9_ok"], true);
    assert_eq!(v["lemma_3_1_ok"], true);
    assert_eq!(v["passed"], out.status.code() == Some(0));
}

#[test]
fn period_of_rows() {
    let out = comply(&["period", "--set", "k=2", "--nmax", "300", "--side", "base"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "preperiod=5 period=3\n");

    let out = comply(&["period", "--set", "k=2", "--nmax", "300", "--side", "comp"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn play_over_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_comply"))
        .args(["play", "--set", "k=1", "--n", "1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"2 base\n1 comp\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Illegal move 2"), "{text}");
    assert!(text.contains("You win"), "{text}");
}
