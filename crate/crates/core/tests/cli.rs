use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn sweil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sweil")).args(args).output().unwrap()
}

fn reports(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn list_names_every_check() {
    let out = sweil(&["--list"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for name in ["c-nr", "d-nr", "second-term", "boundary-two", "intertwining", "poles", "ring-laws", "partition"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
}

#[test]
fn single_point_report_schema() {
    let out = sweil(&["--check", "second-term", "--r", "4", "--j", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = reports(&out);
    assert_eq!(r.len(), 1);
    let rep = &r[0];
    assert_eq!(rep["check"], "second-term");
    assert_eq!(rep["params"], serde_json::json!({"r": 4, "j": 1}));
    assert_eq!(rep["mode"], "both");
    assert_eq!(rep["status"], "pass");
    for key in ["lhs", "rhs", "abs_err", "elapsed_ms", "facts_used"] {
        assert!(rep.get(key).is_some(), "{key}");
    }
    assert!(rep["note"].as_str().unwrap().contains("gamma_1"));
    assert!(!rep["facts_used"].as_array().unwrap().is_empty());
}

#[test]
fn sweeps_and_modes() {
    let out = sweil(&["--check", "c-boundary", "--r-max", "3", "--mode", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    let r = reports(&out);
    assert_eq!(r.len(), 3);
    assert!(r.iter().all(|x| x["mode"] == "symbolic" && x["abs_err"].is_null()));

    let out = sweil(&["--check", "boundary-two", "--r", "3", "--mode", "numeric", "--prec", "40"]);
    let r = reports(&out);
    assert_eq!(r[0]["status"], "pass");
    assert!(r[0]["abs_err"].as_f64().unwrap() < 1e-10);
}

#[test]
fn closed_constants_give_the_same_verdicts() {
    let out = sweil(&["--check", "d-nr", "--r-max", "4", "--consts", "closed", "--mode", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(reports(&out).iter().all(|x| x["status"] == "pass"));
}

#[test]
fn out_of_range_parameters_are_errors() {
    let out = sweil(&["--check", "d-nr", "--n", "6", "--r", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let r = reports(&out);
    assert_eq!(r[0]["status"], "error");
    assert!(r[0]["note"].as_str().unwrap().contains("2r-1"));
}

#[test]
fn unknown_check_and_bad_window_are_usage_errors() {
    assert_eq!(sweil(&["--check", "nope"]).status.code(), Some(2));
    assert_eq!(sweil(&["--window", "2,-2"]).status.code(), Some(2));
    assert_eq!(sweil(&["--mode", "fuzzy"]).status.code(), Some(2));
}

#[test]
fn failing_script_exits_one() {
    let path = scratch("false.sweil");
    std::fs::write(&path, "assert c(3,1) == xiF(3)/xiF(4)\nassert c(3,1) == xiF(4)/xiF(3)\n").unwrap();
    let out = sweil(&["--script", path.to_str().unwrap(), "--mode", "symbolic"]);
    assert_eq!(out.status.code(), Some(1));
    let r = reports(&out);
    assert_eq!(r.len(), 2);
    assert_eq!(r[0]["status"], "fail");
    assert_eq!(r[1]["status"], "pass");
    assert!(r[0]["note"].as_str().unwrap().starts_with("line 1"));
}

#[test]
fn script_syntax_error_exits_two() {
    let path = scratch("broken.sweil");
    std::fs::write(&path, "assert c(3,1) == \n").unwrap();
    let out = sweil(&["--script", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn reports_go_to_the_out_file() {
    let path = scratch("reports.ndjson");
    let out = sweil(&["--check", "telescope", "--r-max", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().count() > 0);
    assert!(text.lines().all(|l| serde_json::from_str::<Value>(l).unwrap()["status"] == "pass"));
}

#[test]
fn runs_are_deterministic_up_to_timing() {
    let args = ["--check", "ring-laws", "--check", "second-term-base", "--r-max", "3"];
    let strip = |out: &Output| {
        reports(out)
            .into_iter()
            .map(|mut v| {
                v.as_object_mut().unwrap().remove("elapsed_ms");
                v
            })
            .collect::<Vec<_>>()
    };
    let a = strip(&sweil(&args));
    let b = strip(&sweil(&args));
    assert!(!a.is_empty());
    assert_eq!(a, b);
}
