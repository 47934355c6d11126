use std::process::Command;

use rbx::{parse_config, run_suite, Format, ModelKind, Report, Suite, SuiteConfig};
use rbx_core::{CheckResult, Rational};

fn rbx(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_rbx")).args(args).output().unwrap()
}

fn verify(extra: &[&str]) -> Result<SuiteConfig, rbx::CliError> {
    let mut argv = vec!["rbx", "verify"];
    argv.extend_from_slice(extra);
    parse_config(argv)
}

fn scratch(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("rbx-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn defaults() {
    let cfg = verify(&[]).unwrap();
    assert_eq!(cfg, SuiteConfig::default());
    assert_eq!(cfg.suite, Suite::All);
    assert_eq!((cfg.order, cfg.window, cfg.dim, cfg.trials, cfg.seed), (6, 10, 3, 200, 42));
}

#[test]
fn weight_is_exact_rational() {
    let cfg = verify(&["--weight", "-3/6"]).unwrap();
    assert_eq!(cfg.weight, Some(Rational::new((-1).into(), 2.into())));
    assert!(verify(&["--weight", "1/0"]).is_err());
    assert!(verify(&["--weight", "0.5"]).is_err());
}

#[test]
fn out_of_range_values_are_rejected() {
    assert!(verify(&["--order", "0"]).is_err());
    assert!(verify(&["--order", "11"]).is_err());
    assert!(verify(&["--dim", "5"]).is_err());
    assert!(verify(&["--window", "1"]).is_err());
    assert!(verify(&["--trials", "0"]).is_err());
    assert!(verify(&["--suite", "nonsense"]).is_err());
}

#[test]
fn flags_override_config_file() {
    let path = scratch(
        "precedence.cfg",
        "# comment\nsuite = spitzer\norder = 4\nseed = 7\nweight = 2/3\nformat = json\n",
    );
    let p = path.to_str().unwrap();
    let cfg = verify(&["--config", p, "--order", "5"]).unwrap();
    assert_eq!(cfg.suite, Suite::Spitzer);
    assert_eq!(cfg.order, 5);
    assert_eq!(cfg.seed, 7);
    assert_eq!(cfg.format, Format::Json);
    assert_eq!(cfg.weight, Some(Rational::new(2.into(), 3.into())));
}

#[test]
fn config_file_errors() {
    let unknown = scratch("unknown.cfg", "colour = blue\n");
    assert!(verify(&["--config", unknown.to_str().unwrap()]).is_err());
    let malformed = scratch("malformed.cfg", "order 4\n");
    assert!(verify(&["--config", malformed.to_str().unwrap()]).is_err());
    assert!(verify(&["--config", "/nonexistent/rbx.cfg"]).is_err());
}

#[test]
fn incompatible_model_is_an_error() {
    let cfg = verify(&["--suite", "spitzer", "--model", "matrix"]).unwrap();
    assert!(run_suite(&cfg).is_err());
    let cfg = verify(&["--suite", "bogoliubov", "--weight", "2"]).unwrap();
    assert!(run_suite(&cfg).is_err());
}

#[test]
fn single_suite_report() {
    let cfg = verify(&["--suite", "rb-laws", "--model", "summation", "--trials", "20"]).unwrap();
    assert_eq!(cfg.model, Some(ModelKind::Summation));
    let report = run_suite(&cfg).unwrap();
    assert_eq!(report.failed, 0);
    assert_eq!(report.exit_code(), 0);
    assert!(!report.checks.is_empty());
    assert!(report.checks.iter().all(|c| c.status == "pass" && c.counterexample.is_none()));
}

#[test]
fn failing_report_exit_code_and_text() {
    let cfg = SuiteConfig::default();
    let results = vec![
        CheckResult::pass("good", "anchor-a", 3),
        CheckResult::fail("bad", "anchor-b", 1, "x = 1"),
    ];
    let report = Report::new(&cfg, results, 0);
    assert_eq!((report.passed, report.failed, report.exit_code()), (1, 1, 1));
    let text = report.to_text();
    assert!(text.contains("counterexample: x = 1"));
    assert!(text.contains("passed: 1  failed: 1"));
}

#[test]
fn json_schema() {
    let out = rbx(&["verify", "--suite", "atkinson", "--model", "matrix", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "atkinson");
    for key in ["suite", "model", "order", "window", "dim", "weight", "alphabet", "bs-arity", "trials", "seed"] {
        assert!(v["params"][key].is_string(), "missing param {key}");
    }
    assert_eq!(v["params"]["model"], "matrix");
    assert!(v["elapsed_ms"].is_u64());
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(v["passed"].as_u64().unwrap() as usize, checks.len());
    for c in checks {
        assert!(c["name"].is_string() && c["anchor"].is_string());
        assert_eq!(c["status"], "pass");
        assert!(c["counterexample"].is_null());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(rbx(&["--help"]).status.code(), Some(0));
    assert_eq!(rbx(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(rbx(&["verify", "--weight", "1/0"]).status.code(), Some(2));
    assert_eq!(rbx(&["verify", "--suite", "spitzer", "--model", "matrix"]).status.code(), Some(2));
    assert_eq!(rbx(&["verify", "--suite", "rb-laws", "--model", "matrix-corrupted"]).status.code(), Some(1));
    assert_eq!(rbx(&["verify", "--suite", "prelie", "--model", "laurent"]).status.code(), Some(0));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("rbx-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = rbx(&[
        "verify", "--suite", "dendriform", "--format", "json", "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["failed"], 0);
    let bad = rbx(&["verify", "--suite", "dendriform", "--output", "/nonexistent/dir/r.txt"]);
    assert_eq!(bad.status.code(), Some(2));
}
