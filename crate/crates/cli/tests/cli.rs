use std::process::{Command, Output};

use serde_json::Value;

fn umbra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbra"))
        .args(args)
        .env_remove("UMBRA_TOL_PROFILE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_kind(o: &Output) -> String {
    let v: Value = serde_json::from_slice(&o.stderr).expect("stderr is a JSON record");
    assert_eq!(v["schema"], "umbra/1");
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn airy_both_methods_table() {
    let o = umbra(&[
        "eval", "--family", "um-airy", "--a", "0.5", "--x", "0:6", "--method", "both",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,quadrature,series,abs_diff"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 13);
    assert!(rows.iter().all(|r| r[3] < 1e-6));
    assert_eq!(rows[12][0], 6.0);
}

#[test]
fn toda_json_is_deterministic() {
    let args = [
        "toda", "--m", "0:4", "--n", "-5:5", "--a", "1", "--alpha", "1", "--beta", "1", "--q0", "0",
    ];
    let first = umbra(&args);
    let second = umbra(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let doc: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["schema"], "umbra/1");
    assert_eq!(doc["rows"].as_array().unwrap().len(), 55);
    assert!((doc["gamma"].as_f64().unwrap() - 1.0421906109874949).abs() < 1e-15);
    let row = &doc["rows"][0];
    for key in ["n", "m", "t", "q", "Q", "continued"] {
        assert!(!row[key].is_null(), "{key}");
    }
}

#[test]
fn verify_all_passes() {
    let o = umbra(&["verify", "--suite", "all", "--tol-profile", "default"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["suites"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_failure_exits_one() {
    // roundoff in the growing solution (~2e-11) clears the default bound, not the strict one
    let o = umbra(&["verify", "--suite", "whittaker-half", "--tol-profile", "strict"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["passed"], false);
    assert!(doc["suites"][0]["report"]["max_abs"].as_f64().unwrap() > 1e-11);
    let o = umbra(&["verify", "--suite", "whittaker-half"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tol_profile_env_var_is_read() {
    let o = Command::new(env!("CARGO_BIN_EXE_umbra"))
        .args(["verify", "--suite", "oscillator"])
        .env("UMBRA_TOL_PROFILE", "strict")
        .output()
        .unwrap();
    assert!(o.status.success());
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["profile"], "strict");
    let o = Command::new(env!("CARGO_BIN_EXE_umbra"))
        .args(["verify"])
        .env("UMBRA_TOL_PROFILE", "sloppy")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two_with_record() {
    for args in [
        vec!["eval", "--family", "nope", "--x", "0:1"],
        vec!["eval", "--family", "airy"],
        vec!["eval", "--family", "airy", "--x", "3:1"],
        vec!["eval", "--family", "delta", "--method", "series", "--x", "0:1"],
        vec!["toda", "--n", "0.5:2"],
        vec!["map", "--format", "csv", "--x", "1"],
        vec!["frobnicate"],
    ] {
        let o = umbra(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        error_kind(&o);
    }
}

#[test]
fn numerical_failure_exits_one() {
    let o = umbra(&[
        "eval", "--family", "um-airy", "--method", "series", "--a", "1/2", "--x", "1/4",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error_kind(&o), "precondition");
    let o = umbra(&["eval", "--family", "geometric", "--a", "1", "--x", "-3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error_kind(&o), "domain");
}

#[test]
fn output_file_and_config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "command = \"eval\"\nfamily = \"umbral-exp\"\na = \"1/2\"\nlambda = 2\nx = \"0:2\"\nformat = \"json\"\n",
    )
    .unwrap();
    let out = dir.path().join("out.json");
    let o = umbra(&[
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    // (1 + λa)^{x/a} = 2^{2x}
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4]["re"], 16.0);

    // flags beat the file
    let o = umbra(&[
        "eval",
        "--config",
        cfg.to_str().unwrap(),
        "--lambda",
        "0",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o)
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(1) == Some("1.0000000000000000e0")));

    std::fs::write(&cfg, "nonsense = 1\n").unwrap();
    let o = umbra(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_kind(&o), "parse");
}

#[test]
fn oscillator_and_wave_tables() {
    let o = umbra(&["oscillator", "--a", "1", "--steps", "8", "--format", "json"]);
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["energy_conserved"], true);
    assert_eq!(doc["rows"][8]["X"], 16.0);
    let o = umbra(&["wave", "--a", "1/2", "--b", "1/2", "-x", "0:1", "-t", "0:1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
}

#[test]
fn map_emits_hyper_spec() {
    let o = umbra(&[
        "map",
        "--numerator",
        "1/3",
        "--denominator",
        "5/7",
        "--argument",
        "1",
        "--a",
        "1",
        "--x",
        "3",
    ]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &doc["results"][0];
    assert_eq!(r["mapped"]["numerator"], serde_json::json!(["1/3", "-3"]));
    assert_eq!(r["mapped"]["argument"], "-1");
    assert!(r["value"]["exact"].is_string());
}
