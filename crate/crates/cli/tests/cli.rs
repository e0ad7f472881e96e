use std::process::{Command, Output};

use hlvir::virasoro::Verdict;
use serde_json::Value;

fn hlvir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlvir"))
        .args(args)
        .env_remove("HLVIR_CACHE_LIMIT")
        .output()
        .expect("run hlvir")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn q_text_output() {
    let out = hlvir(&["q", "--rho", "xi:2", "--lambda", "2,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "4/3*t1^3 - 4*t3");
}

#[test]
fn minus_one_agrees_with_xi_two() {
    for lam in ["2,1", "3", "1,1,1", "4,-1,2", ""] {
        let a = hlvir(&["q", "--rho", "-1", "--lambda", lam]);
        let b = hlvir(&["q", "--rho", "xi:2", "--lambda", lam]);
        assert_eq!(code(&a), 0);
        assert_eq!(stdout(&a), stdout(&b), "lambda {lam}");
    }
}

#[test]
fn q_json_output() {
    let out = hlvir(&["--format", "json", "q", "--rho", "xi:2", "--lambda", "2,1"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rho"], "xi:2");
    assert_eq!(v["lambda"], serde_json::json!([2, 1]));
    assert_eq!(v["poly"].as_array().unwrap().len(), 2);
}

#[test]
fn bracket_reports_central_term() {
    let out = hlvir(&["verify", "--case", "bracket", "--n", "2", "--i", "2", "--j", "-2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("equal: true"));
    assert!(text.lines().any(|l| l == "central: 2"));
}

#[test]
fn verify_json_round_trips() {
    let out = hlvir(&[
        "--format", "json", "verify", "--case", "T1.1", "--n", "2", "--m", "1", "--lambda", "3,1",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let value: Value = serde_json::from_str(&text).unwrap();
    let verdict = Verdict::from_json(&value).unwrap();
    assert!(verdict.equal);
    assert_eq!(verdict.lhs.to_text(), "4*t1^2");

    let spec = serde_json::to_string(&serde_json::to_value(&verdict.case).unwrap()).unwrap();
    let again = hlvir(&["--format", "json", "verify", "--case", "json", "--spec", &spec]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn t1_2_anchor() {
    let out = hlvir(&["verify", "--case", "T1.2", "--n", "2", "--m", "1", "--lambda", "0"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "lhs: 1/2*t1^2"));
    assert!(text.lines().any(|l| l == "rhs: 1/2*t1^2"));
}

#[test]
fn apply_operator() {
    let out = hlvir(&["apply", "--op", "L:n=2,m=-1", "--rho", "xi:2", "--lambda", ""]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1/2*t1^2");
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "selftest", "--criteria", "4,10"];
    let a = hlvir(&args);
    let b = hlvir(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_settings_do_not_change_results() {
    let base = hlvir(&["q", "--rho", "1/2", "--lambda", "3,1,2"]);
    let nocache = hlvir(&["--no-cache", "q", "--rho", "1/2", "--lambda", "3,1,2"]);
    let capped = Command::new(env!("CARGO_BIN_EXE_hlvir"))
        .args(["q", "--rho", "1/2", "--lambda", "3,1,2"])
        .env("HLVIR_CACHE_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(code(&base), 0);
    assert_eq!(stdout(&base), stdout(&nocache));
    assert_eq!(stdout(&base), stdout(&capped));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&hlvir(&["coeff", "--rho", "0", "--mu", "2,1"])), 0);
    assert_eq!(code(&hlvir(&["selftest", "--criteria", "8"])), 1);
    assert_eq!(code(&hlvir(&["bogus"])), 2);
    assert_eq!(code(&hlvir(&["q", "--rho", "xi:1", "--lambda", "1"])), 2);
    assert_eq!(
        code(&hlvir(&["verify", "--case", "T1.1", "--n", "1", "--m", "1", "--lambda", "1"])),
        2
    );
    assert_eq!(code(&hlvir(&["coeff", "--rho", "xi:2", "--mu", "1,1,1,1"])), 3);
    assert_eq!(code(&hlvir(&["mulp", "--r", "2", "--rho", "xi:2", "--lambda", "1"])), 3);
    assert_eq!(
        code(&hlvir(&["verify", "--case", "perpb", "--k", "2", "--r", "0", "--rho", "xi:2"])),
        5
    );
}

#[test]
fn errors_go_to_stderr() {
    let out = hlvir(&["coeff", "--rho", "xi:2", "--mu", "1,1,1,1"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));
}
