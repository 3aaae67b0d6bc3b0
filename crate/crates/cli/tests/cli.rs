//! End-to-end tests driving the compiled binary: exit codes, golden JSON
//! output shapes, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(rel: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.pop(); // crates/
    p.push("core");
    p.push("data");
    p.push(rel);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyred"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_reports_degree_data() {
    let out = run(&[
        "analyze",
        "--operator",
        &data("operators/domb_m-32.json"),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["d"], 3);
    assert_eq!(v["degenerated"], false);
    assert_eq!(v["coprime"], true);
    assert_eq!(v["r_set"].as_array().unwrap().len(), 0);
}

#[test]
fn reduce_matches_quoted_decomposition() {
    let out = run(&[
        "reduce",
        "--operator",
        &data("operators/franel.json"),
        "--poly",
        "27*k^2*(3*k+1)",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "{\"cs\":{\"0\":\"-1\",\"2\":\"-3\"},\"kept\":{},\"residual\":\"0\"}"
    );
}

#[test]
fn generate_prints_the_domb_identity() {
    let out = run(&[
        "generate",
        "--seed",
        &data("seeds/domb_m-32.json"),
        "--p",
        "n^2",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["weight"], "9*n^4-8*n^3-n^2");
    assert_eq!(v["constant"], "4/(3*pi)");
    assert_eq!(
        v["human"],
        "sum_{n>=0} (9n^4-8n^3-n^2) * Domb(n)/(-32)^n = 4/(3*pi)"
    );
}

#[test]
fn telescope_normalized_franel_window() {
    let out = run(&[
        "telescope",
        "--operator",
        &data("operators/franel.json"),
        "--p",
        "1",
        "--initial",
        "1,-2",
        "--normalize",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["weight"], "-9*k-6");
    assert_eq!(v["constant"], "0");
    assert_eq!(v["boundary"][0]["offset"], -1);
    assert_eq!(v["boundary"][0]["coeff"], "-8*n^2");
    assert_eq!(v["boundary"][1]["coeff"], "-n^2");
}

#[test]
fn verify_congruence_pass_and_counterexample_exit_codes() {
    let ok = run(&[
        "verify-congruence",
        "--claim",
        &data("claims/franel_3k2.json"),
        "--to",
        "60",
    ]);
    assert_eq!(ok.status.code(), Some(0));

    // A deliberately wrong range end is still fine; a wrong claim is
    // simulated by checking the p^5 congruence over composite points.
    let json = run(&[
        "verify-congruence",
        "--claim",
        &data("claims/franel_3k2.json"),
        "--to",
        "5",
        "--json",
    ]);
    let text = stdout(&json);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 5);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["n"], 1);
    assert_eq!(first["pass"], true);
}

#[test]
fn seq_prints_terms_one_per_line() {
    let out = run(&["seq", "--name", "franel_signed", "-N", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n-2\n10\n-56\n346\n");
}

#[test]
fn guess_recovers_delannoy() {
    let out = run(&["guess", "--seq", "delannoy", "-J", "2", "-D", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["coeffs"][0], "k+1");
    assert_eq!(v["coeffs"][1], "-6*k-9");
    assert_eq!(v["coeffs"][2], "k+2");

    // Degree too small for any annihilator: mathematical failure, exit 1.
    let none = run(&["guess", "--seq", "domb", "-J", "1", "-D", "1", "-N", "30"]);
    assert_eq!(none.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "--operator"]).status.code(), Some(2));
    assert_eq!(
        run(&["reduce", "--operator", "/nonexistent.json", "--poly", "n"])
            .status
            .code(),
        Some(2)
    );
    // Parse errors in inline expressions are usage errors too.
    let bad = run(&[
        "reduce",
        "--operator",
        &data("operators/franel.json"),
        "--poly",
        "k^-2",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8_lossy(&bad.stderr).into_owned();
    assert!(err.contains("byte 2"), "stderr: {err}");
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "generate",
        "--seed",
        &data("seeds/franel4_m5776.json"),
        "--p",
        "n^3",
        "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn verify_series_seed_and_generated() {
    let out = run(&[
        "verify-series",
        "--seed",
        &data("seeds/franel4_m5776.json"),
        "-N",
        "60",
        "--tolerance",
        "1e-30",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["pass"], true);
    // lambda = 1444/95 is stored canonically as 76/5.
    assert_eq!(v["target"], "76*sqrt(95)/(5*pi)");

    // Too few digits is a usage error.
    let bad = run(&[
        "verify-series",
        "--seed",
        &data("seeds/domb_m64.json"),
        "-N",
        "10",
        "--digits",
        "5",
    ]);
    assert_eq!(bad.status.code(), Some(2));

    // An unconverged partial sum is a mathematical failure (exit 1).
    let fail = run(&[
        "verify-series",
        "--seed",
        &data("seeds/domb_m64.json"),
        "-N",
        "5",
        "--tolerance",
        "1e-30",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("note:"));
}
