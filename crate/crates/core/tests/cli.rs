use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monodromic")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn reduce_and_transforms() {
    let out = run(&["reduce", "--algebra", "weyl", "dx*(x-1)"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["output"], "1 - dx + x*dx");
    let out = run(&["mellin", "dx*(x-1)"]);
    assert_eq!(json(&out)["output"], "-Ti*s + 1 + s");
    let out = run(&["fourier", "--normalize", "1 - dx"]);
    assert_eq!(json(&out)["output"], "1 - x");
    let out = run(&["--pretty", "reduce", "--algebra", "shift", "(s+1) - Ti*s"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "-Ti*s + 1 + s");
}

#[test]
fn syntax_errors_exit_3() {
    let out = run(&["reduce", "--algebra", "shift", "s + +"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 4"));
    assert_eq!(run(&["verify", "no-such-check"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "gauss-suite", "--q", "7", "--n", "4"]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
}

#[test]
fn verdict_exit_codes_and_schema() {
    let out = run(&["verify", "keythm", "--q", "3", "--d", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    for key in ["check", "parameters", "verdict", "witness", "citation", "wall_time_ms"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    assert_eq!(report["check"], "keythm");
    assert_eq!(report["verdict"], "pass");
    assert!(report["citation"].as_str().is_some_and(|s| !s.is_empty()));

    let out = run(&["verify", "propDmod3", "--chi", "1/2", "--n", "2", "--window", "6"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", "propB3-diagnostic", "--q", "3", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let report = json(&out);
    assert_eq!(report["verdict"], "diagnostic");
    assert!(report["witness"]["comparisons"][0]["scalar"].is_string());
}

#[test]
fn trace_tables_in_point_order() {
    let out = run(&["trace", "--q", "5", "--object", "I0:2"]);
    let t = json(&out);
    let pts: Vec<&str> = t["values"].as_array().unwrap().iter().map(|r| r[0].as_str().unwrap()).collect();
    assert_eq!(pts, ["0", "1", "2", "3", "4"]);
    let vals: Vec<&str> = t["values"].as_array().unwrap().iter().map(|r| r[1].as_str().unwrap()).collect();
    assert_eq!(vals, ["0", "2", "0", "0", "2"]);
}
