//! End-to-end tests of the command-line contract: output formats, file
//! handling, and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rs-cli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn sum_full_period() {
    let out = run(&["sum", "--q", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "2 0 -2 0\n");
}

#[test]
fn sum_single_point() {
    let out = run(&["sum", "--q", "4", "--n", "2"]);
    assert_eq!(stdout(&out), "-2\n");
    let out = run(&["sum", "--q", "4", "--n", "-2"]);
    assert_eq!(stdout(&out), "-2\n");
}

#[test]
fn sum_naive_method() {
    let out = run(&["sum", "--q", "9", "--method", "naive"]);
    assert_eq!(stdout(&out), "6 0 0 -3 0 0 -3 0 0\n");
}

#[test]
fn sum_both_methods_report_match() {
    let out = run(&["sum", "--q", "12", "--method", "both"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "naive: 4 0 2 0 -2 0 -4 0 -2 0 2 0\nfast: 4 0 2 0 -2 0 -4 0 -2 0 2 0\nmatch: true\n"
    );
}

#[test]
fn sum_rejects_zero_modulus() {
    let out = run(&["sum", "--q", "0"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn kernel_first_and_second() {
    let out = run(&["kernel", "--q", "3", "--variant", "first"]);
    assert_eq!(stdout(&out), "2 -1 -1\n");
    let out = run(&["kernel", "--q", "5", "--variant", "second"]);
    assert_eq!(stdout(&out), "-1 -1 4 -1 -1\n");
}

#[test]
fn kernel_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("taps.txt");
    let out = run(&["kernel", "--q", "3", "--variant", "first", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "2\n-1\n-1\n");
}

#[test]
fn kernel_usage_errors() {
    let out = run(&["kernel", "--q", "4", "--variant", "second"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("odd"));

    let out = run(&["kernel", "--q", "1", "--variant", "first"]);
    assert_eq!(exit_code(&out), 2);
}

fn write_ramp(path: &Path, length: usize) {
    let body: String = (0..length).map(|n| format!("{n}\n")).collect();
    std::fs::write(path, body).unwrap();
}

#[test]
fn apply_ramp_yields_constant_interior() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ramp.txt");
    write_ramp(&input, 8);
    let out = run(&["apply", "--q", "3", "--variant", "first", "--in", input.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let values: Vec<f64> = stdout(&out).lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(values.len(), 8);
    // Interior indices for q=3, causal kernel: 2..8.
    assert!(values[2..].iter().all(|&v| v == 3.0), "{values:?}");
}

#[test]
fn apply_writes_file_and_honors_boundary() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("const.txt");
    std::fs::write(&input, "5,5,5,5\n").unwrap();
    let output = dir.path().join("filtered.txt");

    let out = run(&[
        "apply", "--q", "2", "--variant", "first",
        "--in", input.to_str().unwrap(),
        "--out", output.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(std::fs::read_to_string(&output).unwrap(), "0\n0\n0\n0\n");

    // Zero padding breaks the constant at the left edge: y[0] = 5 - 0.
    let out = run(&[
        "apply", "--q", "2", "--variant", "first",
        "--in", input.to_str().unwrap(),
        "--boundary", "zero",
    ]);
    assert_eq!(stdout(&out), "5\n0\n0\n0\n");
}

#[test]
fn apply_reports_parse_errors_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    std::fs::write(&input, "1\noops\n").unwrap();
    let out = run(&["apply", "--q", "2", "--variant", "first", "--in", input.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains(":2:1"), "{}", stderr(&out));
}

#[test]
fn product_prints_prediction_and_verdict() {
    let out = run(&["product", "--p", "3", "--q", "2", "--a1", "1", "--a2", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "predicted shift: 4\n\
         predicted period: -1 -2 -1 1 2 1\n\
         brute-force period: -1 -2 -1 1 2 1\n\
         verdict: equal\n"
    );
}

#[test]
fn product_usage_errors() {
    let out = run(&["product", "--p", "6", "--q", "3", "--a1", "0", "--a2", "0"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("coprime"));

    let out = run(&["product", "--p", "2", "--q", "3", "--a1", "0", "--a2", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_small_sweep_passes_and_is_deterministic() {
    let first = run(&["verify", "--q-max", "16"]);
    assert_eq!(exit_code(&first), 0);
    let text = stdout(&first);
    assert!(text.contains("result: PASS"), "{text}");
    assert!(text.contains("rs-core/oracle-equivalence"));
    assert!(text.contains("rs-operators/first-derivative-properties"));
    assert!(text.contains("rs-algebra/shifted-product-sweep"));

    let second = run(&["verify", "--q-max", "16"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn bench_prints_table_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("bench.csv");
    let out = run(&["bench", "--q-max", "16", "--samples", "4", "--csv", csv_path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("speedup"), "{text}");
    assert!(text.contains("true"));

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("q,n_evaluated,naive_ns,fast_ns,speedup,exact\n"));
    assert!(csv.lines().skip(1).all(|line| line.ends_with(",true")));
}

#[test]
fn unknown_flags_exit_with_usage_error() {
    let out = run(&["sum", "--q", "4", "--bogus"]);
    assert_eq!(exit_code(&out), 2);
}
