//! Acceptance gate: runs `hlvir selftest --suite desk` once and reports one
//! PASS/FAIL line per criterion.
//!
//! Criterion 8 includes the claim that c_μ(ξₙ) = 0 whenever l(μ) ≥ n + 1.
//! That claim is false for partitions with a part of multiplicity ≥ n
//! (c_(1,1,1)(ξ₂) = 1/2, c_(1,1,1,1)(ξ₂) is a pole), so criterion 8 and
//! with it criterion 12 report FAIL. This test asserts that those are the
//! only failures and that every other criterion passes.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

const BUDGET: Duration = Duration::from_secs(15 * 60);

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn main() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hlvir"))
        .args(["--format", "json", "selftest", "--suite", "desk"])
        .output()
        .expect("run hlvir");
    let elapsed = start.elapsed();
    let report: Value = serde_json::from_slice(&out.stdout).expect("selftest JSON");
    let criteria = report["criteria"].as_array().expect("criteria list");
    assert_eq!(criteria.len(), 11);

    let mut unexpected = Vec::new();
    for (idx, c) in criteria.iter().enumerate() {
        let id = idx as u64 + 1;
        assert_eq!(c["id"].as_u64(), Some(id));
        let passed = c["passed"].as_bool().expect("passed flag");
        let failures: Vec<&str> = c["failures"]
            .as_array()
            .expect("failures")
            .iter()
            .map(|f| f.as_str().expect("failure text"))
            .collect();
        println!(
            "{} criterion {id}: {} ({} checks, {} failed)",
            verdict(passed),
            c["title"].as_str().unwrap_or(""),
            c["checks"],
            c["failed"]
        );
        for f in failures.iter().take(5) {
            println!("    {f}");
        }
        assert!(c["checks"].as_u64().unwrap_or(0) > 0, "criterion {id} ran no checks");
        let explained = id == 8 && failures.iter().all(|f| f.starts_with("vanishing claim"));
        if !passed && !explained {
            unexpected.push(id);
        }
    }

    let code = out.status.code();
    let within = elapsed <= BUDGET;
    println!(
        "{} criterion 12: selftest --suite desk exits 0 within 15 minutes (exit {:?}, {:.1}s)",
        verdict(code == Some(0) && within),
        code,
        elapsed.as_secs_f64()
    );
    assert!(within, "desk suite took {elapsed:?}");
    let only_known = criteria.iter().filter(|c| c["passed"] == false).count() == 1;
    assert!(
        code == Some(0) || (code == Some(1) && only_known),
        "selftest exit {code:?}"
    );
    assert!(unexpected.is_empty(), "unexplained failures in criteria {unexpected:?}");
}
