//! CLI contract tests: exit statuses, report round-trips, and the
//! determinism of re-running a recorded config.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_starpi"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = run(args);
    let v = if stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("bad JSON ({e}); stderr: {stderr}"))
    };
    (code, v)
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, stderr) = run(&["check", "--algebra", "t:0", "--poly", "y1"]);
    assert_eq!(code, 2, "{stderr}");
    assert!(stderr.contains("descriptor"));

    let (code, _, stderr) = run(&["check", "--algebra", "t:2", "--poly", "y1 +"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("offset"), "{stderr}");

    let (code, _, _) = run(&["check", "--algebra", "t:2"]);
    assert_eq!(code, 2, "missing required flag is a usage error");

    // Exhaustive mode refuses non-multilinear polynomials.
    let (code, _, stderr) = run(&["check", "--algebra", "t:2", "--poly", "y1*y1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("multilinear"), "{stderr}");

    let (code, _, stderr) = run(&[
        "containment", "--a", "t:1", "--b", "s:2", "--max", "2", "--expect", "identity",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("expect"), "{stderr}");

    let (code, _, stderr) = run(&["check", "--algebra", "t:2", "--poly", "y1", "--workers", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("workers"), "{stderr}");
}

#[test]
fn budget_exhaustion_exits_three() {
    let (code, _, stderr) = run(&[
        "check", "--algebra", "t:3", "--poly", "st(2; y,y)", "--max-tuples", "2",
    ]);
    assert_eq!(code, 3);
    assert!(stderr.contains("budget"), "{stderr}");

    let (code, _, stderr) = run(&["containment", "--a", "t:1", "--b", "t:1", "--max", "7"]);
    assert_eq!(code, 3, "degree above the budget: {stderr}");
}

#[test]
fn expectation_mismatch_exits_one() {
    let (code, _, _) = run(&[
        "check", "--algebra", "t:2", "--poly", "st(2; y,y)", "--expect", "identity",
    ]);
    assert_eq!(code, 1);

    let (code, _, _) = run(&[
        "check", "--algebra", "t:2", "--poly", "st(2; y,y)", "--expect", "nonidentity",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn randomized_identity_verdicts_are_flagged_probabilistic() {
    let (code, report) = run_json(&[
        "check", "--algebra", "ex:1", "--poly", "x1*x2 - x2*x1", "--mode", "randomized",
        "--trials", "30", "--seed", "5", "--output", "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "identity");
    assert_eq!(report["probabilistic"], Value::Bool(true));
    assert_eq!(report["seed"], Value::from(5u64));
}

/// Reports embed a normalized argv; re-running it must reproduce the
/// report byte for byte, minus timings.
#[test]
fn recorded_configs_rerun_to_identical_reports() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["check", "--algebra", "t:3", "--poly", "st(4; z,z,z,z)"],
        vec!["min-degree", "--algebra", "t:2", "--parity", "x", "--max", "6"],
        vec!["containment", "--a", "t:1", "--b", "s:2", "--max", "2"],
        vec!["embed", "--from", "ex:1", "--to", "s:2"],
        vec!["subspace", "--algebra", "s:2", "--degree", "2"],
        vec![
            "check", "--algebra", "t:2", "--poly", "[y1,y2]", "--mode", "randomized", "--trials",
            "20", "--seed", "11",
        ],
    ];
    for cmd in commands {
        let mut args = cmd.clone();
        args.extend_from_slice(&["--output", "json"]);
        let (code, mut first) = run_json(&args);
        assert_eq!(code, 0, "{cmd:?}");

        let argv: Vec<String> = first["config"]["argv"]
            .as_array()
            .expect("argv recorded")
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        let rerun_args: Vec<&str> = argv.iter().map(String::as_str).collect();
        let (code, mut second) = run_json(&rerun_args);
        assert_eq!(code, 0, "rerun of {cmd:?}");

        first.as_object_mut().unwrap().remove("timings");
        second.as_object_mut().unwrap().remove("timings");
        assert_eq!(
            serde_json::to_string(&first).unwrap(),
            serde_json::to_string(&second).unwrap(),
            "{cmd:?}"
        );
    }
}

#[test]
fn bench_reports_agreement_and_timings() {
    let (code, report) = run_json(&[
        "bench", "--algebra", "t:2", "--parity", "x", "--degree", "4", "--trials", "5",
        "--output", "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "strategies-agree");
    assert_eq!(report["details"]["full_scan_cross_validated"], Value::Bool(true));
    let timings = report["timings"].as_object().unwrap();
    for key in ["leibniz_ms", "subset_dp_ms", "combinations_ms"] {
        assert!(timings.contains_key(key), "{key} missing");
    }
}

#[test]
fn reports_carry_version_config_and_dimension_table() {
    let (_, report) = run_json(&[
        "check", "--algebra", "s:4", "--poly", "st(2; z,z)", "--output", "json",
    ]);
    assert_eq!(report["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(report["config"]["algebra"], "s:4");
    let table = report["algebras"].as_array().unwrap();
    assert_eq!(table[0]["descriptor"], "s:4");
    assert_eq!(table[0]["dim"], 16);
    assert_eq!(table[0]["y_dim"], 6);
    assert_eq!(table[0]["z_dim"], 10);
    assert_eq!(report["seed"], 0);
}

#[test]
fn truncation_banner_present_on_truncated_commands() {
    let (_, report) = run_json(&["containment", "--a", "t:1", "--b", "t:1", "--max", "2", "--output", "json"]);
    assert_eq!(report["truncated_at"], 2);
    let (_, human, _) = run(&["containment", "--a", "t:1", "--b", "t:1", "--max", "2"]);
    assert!(human.contains("truncated at degree 2"), "{human}");
}
