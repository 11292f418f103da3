use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn f5w(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_f5w")).args(args).output().expect("spawn f5w")
}

fn f5w_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_f5w"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn f5w");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_file(name: &str, contents: &[u8]) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("f5w-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn gamma_inverse_lemma_report() {
    let out = f5w(&["lemma", "--name", "gamma-inverse", "--d", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["lemma"], "gamma-inverse");
    assert_eq!(v["parameter"], 5);
    assert_eq!(v["pass"], true);
}

#[test]
fn wheel_blowup_as_edge_list() {
    let out = f5w(&["construct", "--wheel", "5,2,2,2,2,2", "--emit", "3g"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("15 100"));
    assert_eq!(text.lines().count(), 101);
}

#[test]
fn tight_wheel_properties() {
    let v = json(&f5w(&["construct", "--wheel-tight", "15"]));
    let p = &v["properties"];
    assert_eq!(p["min_degree"], 20);
    assert_eq!(p["min_degree_over_n2"]["exact"], "4/45");
    assert_eq!(p["threshold_4n2_over_45"], "equal");
    assert_eq!(p["cancellative"], true);
    assert_eq!(p["three_partite"], false);
}

#[test]
fn check_reads_stdin_and_reports_predicates() {
    let g = f5w(&["construct", "--turan", "6", "--emit", "3g"]);
    let out = f5w_stdin(&["check", "--file", "-", "--f5", "--k4shadow", "--3partite"], &String::from_utf8(g.stdout).unwrap());
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let checks = v["checks"].as_object().unwrap();
    assert_eq!(checks.len(), 3);
    assert_eq!(v["checks"]["f5"]["free"], true);
    assert_eq!(v["checks"]["k4shadow"]["present"], false);
    assert_eq!(v["checks"]["3partite"]["three_partite"], true);
}

#[test]
fn check_all_on_f5() {
    let path = temp_file("f5.3g", b"5 3\n0 1 2\n0 1 3\n2 3 4\n");
    let out = f5w(&["check", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["checks"]["f5"]["free"], false);
    assert_eq!(v["checks"]["theorem"]["verdict"], "vacuous");
    assert_eq!(v["checks"]["theorem"]["reason"], "not-f5-free");
    assert_eq!(v["checks"]["alpha"]["equal"], true);
}

#[test]
fn search_matches_expected_optimum_and_validates() {
    let args = ["search", "--n", "6", "--forbid", "k4minus,f5", "--mode", "max-min-degree", "--non-3partite"];
    let out = f5w(&args);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["optimum"].as_u64().unwrap() <= 3);
    assert_eq!(v["exhaustive"], true);
    let path = temp_file("search.json", &out.stdout);
    let val = f5w(&["validate", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&val), 0, "{}", String::from_utf8_lossy(&val.stdout));
}

#[test]
fn identical_runs_give_identical_json() {
    let args = ["search", "--n", "7", "--mode", "max-edges"];
    let a = f5w(&args);
    let b = f5w(&[&args[..], &["--threads", "1"]].concat());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["optimum"], 12);
}

#[test]
fn budget_exhaustion_fails_the_run() {
    let out = f5w(&["search", "--n", "7", "--budget", "5"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["exhaustive"], false);
}

#[test]
fn tampered_construct_result_is_rejected() {
    let out = f5w(&["construct", "--turan", "7"]);
    let mut v = json(&out);
    v["properties"]["min_degree"] = Value::from(99);
    let path = temp_file("tampered.json", v.to_string().as_bytes());
    let val = f5w(&["validate", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&val), 1);
    assert!(!json(&val)["mismatches"].as_array().unwrap().is_empty());
}

#[test]
fn witness_validation() {
    let host = temp_file("host.3g", b"5 3\n0 1 2\n0 1 3\n2 3 4\n");
    let check = f5w(&["check", "--file", host.to_str().unwrap(), "--f5"]);
    let w = json(&check)["checks"]["f5"]["witness"].to_string();
    let wpath = temp_file("w.json", w.as_bytes());
    let out = f5w(&["validate", "--file", host.to_str().unwrap(), "--witness", wpath.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn failing_parameter_check_exits_one() {
    let out = f5w(&["lemma", "--name", "parameters", "--alpha", "0", "--beta", "1", "--delta", "4/45", "--gamma", "0"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&f5w(&["frobnicate"])), 2);
    assert_eq!(code(&f5w(&["lemma", "--name", "opt2", "--d", "13"])), 2);
    let out = f5w(&["construct", "--wheel", "5,2,2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--wheel"));
    assert_eq!(code(&f5w(&["audit", "--emit", "3g"])), 2);
    assert_eq!(code(&f5w(&["check", "--file", "/nonexistent/h.3g"])), 2);
}

#[test]
fn fuzz_smoke() {
    let out = f5w(&["search", "--fuzz", "500", "--seed", "9"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["fuzz"]["instances"], 500);
    assert_eq!(v["fuzz"]["counterexamples"], 0);
}

#[test]
fn claim_and_parameter_audit() {
    let out = f5w(&["audit", "--claims", "--parameters", "--matrices"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["summary"].as_array().unwrap().len(), 2 + 19 + 11 + 1);
}

#[test]
fn text_output() {
    let out = f5w(&["lemma", "--name", "pentagon", "--emit", "text"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("lemma: pentagon"), "{text}");
}
