use std::process::{Command, Output};

use serde_json::Value;

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_liecalc"));
    cmd.args(args).env_remove("LIECALC_BACKEND");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

/// Exit code and the parsed stderr error object.
fn fails(args: &[&str]) -> (i32, Value) {
    let o = run(args);
    let err: Value = serde_json::from_slice(&o.stderr).unwrap_or_else(|_| panic!("{}", String::from_utf8_lossy(&o.stderr)));
    let code = o.status.code().unwrap();
    assert_eq!(err["exit_code"], code);
    assert!(err["error"].is_string() && err["message"].is_string());
    (code, err)
}

#[test]
fn slope_examples() {
    assert_eq!(ok(&["slope", "-e", "x1^2", "-x", "3", "-v", "1", "-t", "0", "--backend", "rational"]), "6\n");
    assert_eq!(ok(&["slope", "-e", "x1^2", "-x", "3", "-v", "1", "-t", "1"]), "7\n");
    assert_eq!(ok(&["slope", "-e", "x1", "-x", "5", "-v", "2", "-t", "9"]), "2\n");
    assert_eq!(ok(&["slope", "-e", "x1*x2", "-x", "1/2,3", "-v", "2,-1", "-t", "3"]), "-1/2\n");
    assert_eq!(ok(&["slope", "-e", "x1^2", "-x", "3", "-v", "1", "-t", "0", "--backend", "fp:101"]), "6\n");
    assert_eq!(
        ok(&["slope", "-e", "x1^2", "-x", "3", "-v", "1", "-t", "0", "--format", "json"]),
        "{\"slope\":[\"6\"]}\n"
    );
}

#[test]
fn second_order_slopes() {
    let full = ["slope", "-e", "x1^2", "-x", "0", "-v", "1", "--order", "2", "-t", "1", "-t", "1", "-t", "1"];
    assert_eq!(ok(&full), "1\n");
    let sym = ["slope", "-e", "x1^2", "-x", "0", "-v", "1", "--v2", "1", "--order", "2", "--sym", "-t", "2", "-t", "-3"];
    assert_eq!(ok(&sym), "2\n");
    let zero = ["slope", "-e", "x1^3", "-x", "2", "-v", "1", "--v2", "1", "--order", "2", "--sym", "-t", "0", "-t", "0"];
    assert_eq!(ok(&zero), "12\n");
}

#[test]
fn lift_examples() {
    let input = r#"{"t":["3"],"coeffs":{"∅":"2","1":"5"}}"#;
    let squared = ok(&["lift", "-e", "x1^2", "--input", input]);
    // a = 2, b = 5, t = 3: a² = 4, 2ab + tb² = 95
    assert_eq!(squared, "{\"n\":1,\"t\":[\"3\"],\"carrier\":[1],\"coeffs\":{\"∅\":\"4\",\"1\":\"95\"},\"backend\":\"rational\"}\n");
    assert_eq!(ok(&["lift", "-e", "x1*x1", "--input", input]), squared);
    assert_eq!(
        ok(&["lift", "-e", "x1", "--input", input]),
        "{\"n\":1,\"t\":[\"3\"],\"carrier\":[1],\"coeffs\":{\"∅\":\"2\",\"1\":\"5\"},\"backend\":\"rational\"}\n"
    );
    let pair = r#"[{"t":["0"],"coeffs":{"∅":"2","1":"1"}},{"t":["0"],"coeffs":{"∅":"3"}}]"#;
    let out: Value = serde_json::from_str(&ok(&["lift", "-e", "x1*x2", "--input", pair])).unwrap();
    assert_eq!(out[0]["coeffs"], serde_json::json!({"∅": "6", "1": "3"}));

    let dir = std::env::temp_dir().join(format!("liecalc-lift-{}", std::process::id()));
    std::fs::write(&dir, input).unwrap();
    assert_eq!(ok(&["lift", "-e", "x1^2", "--input", &format!("@{}", dir.display())]), squared);
    std::fs::remove_file(dir).unwrap();
}

#[test]
fn split_examples() {
    assert_eq!(ok(&["split", "--input", r#"{"t":["1"],"coeffs":{"∅":"2","1":"5"}}"#]), "[\"2\",\"7\"]\n");
    assert_eq!(ok(&["split", "--input", r#"{"t":["2","1/2"],"coeffs":{"∅":"3"}}"#]), "[\"3\",\"3\",\"3\",\"3\"]\n");
    assert_eq!(ok(&["split", "--roundtrip", "--input", r#"{"t":["2","-1"],"coeffs":{"∅":"3","12":"1"}}"#]), "ok\n");
    let (code, err) = fails(&["split", "--input", r#"{"t":["0"],"coeffs":{"∅":"2","1":"5"}}"#]);
    assert_eq!(code, 4);
    assert_eq!(err["error"], "not_unit");
}

#[test]
fn converge_examples() {
    let csv = ok(&["converge", "-e", "x1^2", "-x", "3", "-v", "1", "--halvings", "5"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,slope_0,richardson_err"));
    for line in lines {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cols[1], 6.0 + cols[0]);
    }

    let csv = ok(&["converge", "-e", "exp(x1)", "-x", "0", "-v", "1", "--t0", "1", "--halvings", "10"]);
    let last: Vec<f64> = csv.lines().last().unwrap().split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(last[0], 0.0);
    assert!((last[1] - 1.0).abs() < 1e-6);
    assert!(last[2] < 1e-6);

    let csv = ok(&["converge", "-e", "3*x1 - x2", "-x", "1,2", "-v", "1,1", "--halvings", "4"]);
    assert!(csv.lines().skip(1).all(|l| l.split(',').nth(1) == Some("2")));

    assert_eq!(fails(&["converge", "--backend", "rational", "-e", "x1", "-x", "1", "-v", "1"]).0, 3);
    let o = run_env(&["converge", "-e", "x1", "-x", "1", "-v", "1"], &[("LIECALC_BACKEND", "fp:7")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn error_contract() {
    assert_eq!(fails(&["slope", "-e", "x1^", "-x", "3", "-v", "1", "-t", "0"]).0, 1);
    assert_eq!(fails(&["slope", "-e", "x1", "-x", "three", "-v", "1", "-t", "0"]).0, 1);
    let (code, err) = fails(&["slope", "-e", "1/x1", "-x", "1", "-v", "-1", "-t", "1", "--exclude", "0"]);
    assert_eq!((code, err["error"].as_str()), (2, Some("domain_violation")));
    let (code, err) = fails(&["slope", "-e", "x1*x2", "-x", "3", "-v", "1", "-t", "0"]);
    assert_eq!((code, err["error"].as_str()), (3, Some("arity_mismatch")));
    assert_eq!(fails(&["slope", "-e", "x1", "-x", "3", "-v", "1", "-t", "0", "--backend", "fp:10"]).0, 3);
    assert_eq!(fails(&["slope", "-e", "x1", "-x", "3", "-v", "1,2", "-t", "0"]).0, 3);
    assert_eq!(fails(&["slope", "-e", "1/x1", "-x", "1", "-v", "-1", "-t", "1"]).0, 4);
    assert_eq!(fails(&["--bogus"]).0, 3);
    assert_eq!(fails(&["slope", "-e", "x1", "-x", "1", "-v", "1", "-t", "0", "--tol", "0"]).0, 3);
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Usage"));
}

#[test]
fn check_reports_and_exit_codes() {
    let out = ok(&["check", "torsor", "--samples", "30", "--seed", "3"]);
    let laws: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(laws.len(), 5);
    assert!(laws.iter().all(|l| l["failures"] == 0));
    let names: Vec<&str> = laws.iter().map(|l| l["law"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);

    let out = ok(&["check", "chain", "--backend", "fp:101", "--samples", "100"]);
    assert!(out.lines().all(|l| serde_json::from_str::<Value>(l).unwrap()["failures"] == 0));

    let (code, err) = fails(&["check", "nope"]);
    assert_eq!((code, err["error"].as_str()), (3, Some("unknown_suite")));

    let o = run(&["check", "groupoid", "--samples", "10", "--inject-fault"]);
    assert_ne!(o.status.code(), Some(0));
    let canary: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(canary.iter().any(|l| l["law"] == "canary/corrupted-pair-groupoid" && l["failures"].as_u64() > Some(0)));
}

#[test]
fn check_all_is_byte_identical_across_runs() {
    let a = run(&["check", "all", "--backend", "rational", "--seed", "7"]);
    let b = run(&["check", "all", "--backend", "rational", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["check", "all", "--backend", "fp:101", "--seed", "7", "--samples", "50"]);
    let d = run(&["check", "all", "--backend", "fp:101", "--seed", "7", "--samples", "50"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(c.stdout, d.stdout);
}
