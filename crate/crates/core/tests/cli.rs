mod common;

use std::process::{Command, Output};

use common::{fixture_path, fixture_text};
use partial_duality::report::parse_structured;
use partial_duality::scenario::{load_scenario, run, RunOptions, ScenarioError, Suite};

fn pdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdual")).args(args).output().expect("binary runs")
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("pdual-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn s1_passes_with_exit_zero_and_one_line_per_check() {
    let out = pdual(&["verify", fixture_path("s1.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("report: s1\n"));
    assert!(text.lines().any(|l| l.starts_with("duality.kernel") && l.contains("pass") && l.contains("dim_kernel=1")));
    assert!(!text.contains(" fail "));
}

#[test]
fn wrong_expectation_exits_one() {
    let text = fixture_text("s1.json").replace("\"dim_kernel\": 1", "\"dim_kernel\": 2");
    let path = temp_file("s1_wrong.json", &text);
    let out = pdual(&["verify", path.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(out.status.code(), Some(1));
    let report = parse_structured(&out.stdout).unwrap();
    let c = report.check("expectations").unwrap();
    assert!(!c.passed());
    assert_eq!(c.witnesses, vec!["dim_kernel: expected 2, measured 1".to_string()]);
}

#[test]
fn corrupted_and_malformed_inputs_exit_two() {
    let out = pdual(&["verify", fixture_path("corrupt_axiom_ii.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[axiom_ii]"));

    let path = temp_file("broken.json", "{\n  \"name\": \"x\",\n  \"group\": {\"cyclic\": 2,\n}");
    let out = pdual(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let out = pdual(&["verify", "/nonexistent/scenario.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_scalar_reports_its_path() {
    let text = fixture_text("s1.json").replace("[[1, 0], [0, 0]]", "[[1, 0], [0, \"1/0\"]]");
    let err = load_scenario(&text, None).unwrap_err();
    match err {
        ScenarioError::Parse { location, .. } => assert_eq!(location, "partial_action.explicit.beta[1][1][1]"),
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn field_override_and_suite_selection() {
    let path = fixture_path("s1.json");
    let out = pdual(&["verify", path.to_str().unwrap(), "--field", "fp:3", "--suite", "duality", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let report = parse_structured(&out.stdout).unwrap();
    assert_eq!(report.measured["field_characteristic"], 3);
    assert!(report.check("duality.kernel").is_some());
    assert!(report.check("lemma1.kernel").is_none());
    assert!(report.check("separability.centralizing").is_none());

    let out = pdual(&["verify", path.to_str().unwrap(), "--field", "fp:4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pdual(&["verify", path.to_str().unwrap(), "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_report() {
    let dest = temp_file("report.json", "");
    let out = pdual(&["verify", fixture_path("global_z2_swap.json").to_str().unwrap(), "--format", "structured", "--out", dest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report = parse_structured(&std::fs::read(&dest).unwrap()).unwrap();
    assert_eq!(report.measured["dim_kernel"], 0);
    assert_eq!(report.measured["dim_corner"], 8);
}

#[test]
fn timings_are_opt_in() {
    let s = load_scenario(&fixture_text("s1.json"), None).unwrap();
    let plain = run(&s, &RunOptions::default());
    assert!(plain.checks.iter().all(|c| c.wall_time_us.is_none()));
    let timed = run(&s, &RunOptions { suites: vec![Suite::Lemma1], timings: true });
    assert!(timed.checks.iter().filter(|c| c.name.starts_with("lemma1.")).all(|c| c.wall_time_us.is_some()));
}

#[test]
fn list_suites_and_selftest() {
    let out = pdual(&["list-suites"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for s in Suite::ALL {
        assert!(text.lines().any(|l| l.starts_with(s.name())), "{s} missing");
    }
    let out = pdual(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn hopf_suite_without_hopf_data_is_skipped() {
    let s = load_scenario(&fixture_text("global_z2_swap.json").replace("\"hopf_lift\": true,", ""), None).unwrap();
    let r = run(&s, &RunOptions { suites: vec![Suite::Hopf], timings: false });
    assert_eq!(r.check("hopf").unwrap().status, partial_duality::report::Status::Skipped);
    assert!(r.passed());
}
