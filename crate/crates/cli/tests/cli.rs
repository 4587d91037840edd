//! CLI contract tests: output conventions and exit codes.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_motivic"))
        .args(args)
        .env_remove("MOTIVIC_THREADS")
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn a2_both_reports_equal() {
    let (stdout, _, code) = run(&["a2", "--k", "2", "--n", "2", "--r", "0", "--method", "both"]);
    assert_eq!(code, 0);
    assert!(stdout.trim_end().ends_with("EQUAL"));
}

#[test]
fn flag_axioms_json_passes() {
    let (stdout, _, code) = run(&[
        "flag", "--mu", "2,2", "--index", "1,3/2,4", "--emit", "axioms", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
    assert_eq!(v["omega"], "1,3/2,4");
    assert_eq!(v["entries"].as_array().unwrap().len(), 6);
}

#[test]
fn qbinom_prints_q_polynomial() {
    let (stdout, _, code) = run(&["qbinom", "--a", "2", "--r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1+q");
}

#[test]
fn polytope_emits_schema() {
    let (stdout, _, code) = run(&[
        "polytope", "--vars", "a,b", "--poly",
        "(1+y)*a^-1*b^-1 + (-1+y^2)*a^-4*b^1 + (1+y)*a^-3*b^2",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(
        v["vertices"],
        serde_json::json!([[-4, 1], [-3, 2], [-1, -1]])
    );
}

#[test]
fn limit_finite_and_infinite() {
    let (stdout, _, code) = run(&[
        "limit", "--num", "(1) + (y)*xi^1", "--den", "(1) + (-1)*xi^1",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("limit = "));
    let (stdout, _, code) = run(&["limit", "--num", "(1)*xi^2", "--den", "(1)*xi^1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "limit = infinity");
}

#[test]
fn usage_errors_exit_2() {
    // Unknown flag (clap) and semantic validation both use exit code 2.
    let (_, _, code) = run(&["a2", "--bogus"]);
    assert_eq!(code, 2);
    let (_, stderr, code) = run(&["a2", "--k", "3", "--n", "2", "--r", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));
    let (_, _, code) = run(&["flag", "--mu", "2,2", "--index", "1/2,3,4"]);
    assert_eq!(code, 2);
}

#[test]
fn selftest_passes() {
    let (stdout, _, code) = run(&["selftest"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().all(|l| l.starts_with("ok")));
    assert_eq!(stdout.lines().count(), 7);
}

#[test]
fn env_thread_override_is_deterministic() {
    let with_env = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_motivic"))
            .args(["flag", "--mu", "1,1,1", "--index", "2/3/1", "--emit", "restrictions"])
            .env("MOTIVIC_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(with_env("1"), with_env("3"));
}
