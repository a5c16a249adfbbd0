//! End-to-end tests of the `maxmin` binary: exit codes, human and JSON
//! output, and error handling for malformed inputs.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_maxmin"))
}

fn sample_path() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/sample.toml").to_string()
}

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_instance(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::Builder::new()
        .suffix(".toml")
        .tempfile()
        .expect("temp file");
    file.write_all(content.as_bytes()).expect("write");
    file
}

#[test]
fn eigen_reports_the_greatest_eigenvector() {
    let out = run(&["eigen", "--input", &sample_path()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("(5, 7, 7, 5)"), "stdout: {text}");
}

#[test]
fn eigen_emits_valid_json() {
    let out = run(&["eigen", "--input", &sample_path(), "--json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["command"], "eigen");
    assert_eq!(value["greatest"]["ticks"], serde_json::json!([5, 7, 7, 5]));
}

#[test]
fn orbit_distinguishes_attracted_and_periodic_starts() {
    // a fixed point is attracted immediately
    let out = run(&["orbit", "--input", &sample_path(), "--x0", "4,4,4,4"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    // the box ceiling enters a period-2 cycle and never stabilises
    let out = run(&["orbit", "--input", &sample_path(), "--x0", "7,9,6,5"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("period: 2"), "stdout: {}", stdout(&out));
}

#[test]
fn orbit_requires_a_start_vector() {
    // sample.toml has a vector entry, so drop it to exercise the error
    let file = write_instance(
        "top = 10\nmatrix = [[4, 4], [2, 2]]\nlower = [0, 0]\nupper = [10, 10]\n",
    );
    let out = run(&["orbit", "--input", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("x0"), "stderr: {}", stderr(&out));
}

#[test]
fn check_conforming_exit_codes_cover_all_three_verdicts() {
    let out = run(&["check-conforming", "--input", &sample_path()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("Simple"));

    let out = run(&["check-conforming", "--input", &data("twin_rows.toml")]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("NotSimple"), "stdout: {}", stdout(&out));

    // a box whose floor reaches the greatest constant eigenvector level is
    // out of scope for the test
    let file = write_instance(
        "top = 10\nmatrix = [[4, 4], [4, 4]]\nlower = [4, 4]\nupper = [9, 9]\n",
    );
    let out = run(&["check-conforming", "--input", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(
        stdout(&out).contains("Inapplicable"),
        "stdout: {}",
        stdout(&out)
    );
}

#[test]
fn force_oracle_overrides_the_inapplicable_verdict() {
    let file = write_instance(
        "top = 10\nmatrix = [[4, 4], [4, 4]]\nlower = [4, 4]\nupper = [9, 9]\n",
    );
    let out = run(&[
        "check-conforming",
        "--input",
        file.path().to_str().unwrap(),
        "--force-oracle",
    ]);
    // the oracle decides simplicity directly: (5, 5) and (5, 4) both map to
    // (5, 5), so the eigenspace is not simple and the exit code is 1
    assert_eq!(code(&out), 1, "stderr: {}", stderr(&out));
}

#[test]
fn solve_reports_unique_solutions_and_unsolvable_systems() {
    let out = run(&["solve", "--input", &sample_path(), "--b", "5,6,6,5"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("solvable: true"), "stdout: {text}");
    assert!(text.contains("unique in box: true"), "stdout: {text}");

    let out = run(&["solve", "--input", &sample_path(), "--b", "9,9,9,9"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("solvable: false"));
}

#[test]
fn solve_json_round_trips_the_report() {
    let out = run(&["solve", "--input", &sample_path(), "--b", "5,6,6,5", "--json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["command"], "solve");
    assert_eq!(value["solvable"], true);
    assert_eq!(value["unique_in_box"], true);
    assert_eq!(value["principal"]["ticks"], serde_json::json!([5, 6, 6, 5]));
}

#[test]
fn robust_answers_for_the_identity_matrix() {
    let out = run(&["robust", "--input", &data("identity.toml")]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("weakly robust: true"), "stdout: {text}");
}

#[test]
fn robust_flags_a_counterexample() {
    let file = write_instance(
        "top = 10\nmatrix = [[10, 10], [10, 10]]\nlower = [0, 0]\nupper = [10, 10]\n",
    );
    let out = run(&["robust", "--input", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("(0, 1)"), "stdout: {}", stdout(&out));
}

#[test]
fn verify_cross_checks_the_instance_against_the_oracle() {
    let out = run(&[
        "verify",
        "--input",
        &sample_path(),
        "--max-oracle-candidates",
        "40",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    for check in [
        "greatest-eigenvector",
        "conforming",
        "solve",
        "robustness-forms",
        "orbit-probes",
    ] {
        assert!(text.contains(check), "missing {check} in: {text}");
    }
    assert!(text.contains("verdicts agree: true"), "stdout: {text}");
}

#[test]
fn usage_errors_exit_with_three() {
    // unknown subcommand
    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 3);
    // unknown flag
    let out = run(&["eigen", "--input", &sample_path(), "--frobnicate"]);
    assert_eq!(code(&out), 3);
    // missing required input
    let out = run(&["eigen"]);
    assert_eq!(code(&out), 3);
    // malformed vector list
    let out = run(&["solve", "--input", &sample_path(), "--b", "5,a,6,5"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("error"), "stderr: {}", stderr(&out));
}

#[test]
fn bad_instance_files_exit_with_three() {
    // no such file
    let out = run(&["eigen", "--input", "/nonexistent/instance.toml"]);
    assert_eq!(code(&out), 3);
    // invalid TOML
    let file = write_instance("top = [not toml");
    let out = run(&["eigen", "--input", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    // non-square matrix
    let file = write_instance("top = 10\nmatrix = [[1, 2, 3], [4, 5, 6]]\nlower = [0, 0]\nupper = [10, 10]\n");
    let out = run(&["eigen", "--input", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    // entry above the chain top
    let file = write_instance("top = 10\nmatrix = [[11, 2], [4, 5]]\nlower = [0, 0]\nupper = [10, 10]\n");
    let out = run(&["eigen", "--input", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    // lower bound above upper bound
    let file = write_instance("top = 10\nmatrix = [[1, 2], [4, 5]]\nlower = [6, 6]\nupper = [5, 9]\n");
    let out = run(&["eigen", "--input", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 3);
}

#[test]
fn help_and_version_exit_cleanly() {
    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for sub in ["eigen", "orbit", "check-conforming", "solve", "robust", "verify"] {
        assert!(text.contains(sub), "missing {sub} in help: {text}");
    }
    let out = run(&["--version"]);
    assert_eq!(code(&out), 0);
}
