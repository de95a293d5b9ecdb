//! End-to-end checks of the `braidtn` binary: exit-code contract,
//! determinism, and JSON round-trips.

use std::io::Write;
use std::process::Command;

use braidtn_cli::format::matrix_from_json;
use braidtn_core::braid::{canonical_params, phi_generator, subspace_matrix, MuValue};

fn braidtn(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_braidtn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &std::process::Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn same_seed_same_bytes() {
    let a = braidtn(&["verify", "--n", "3", "--samples", "2", "--seed", "11"]);
    let b = braidtn(&["verify", "--n", "3", "--samples", "2", "--seed", "11"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = braidtn(&["verify", "--n", "3", "--samples", "2", "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout, "different seed should sample differently");
}

#[test]
fn matrices_json_round_trip() {
    let out = braidtn(&["matrices", "--n", "3", "--mu", "symbolic", "--basis", "subspace"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "matrices");
    assert!(doc["version"].is_string());
    let p = canonical_params(3, &MuValue::Symbolic).unwrap();
    let arr = doc["results"]["matrices"].as_array().unwrap();
    assert_eq!(arr.len(), 2);
    for (k, v) in arr.iter().enumerate() {
        let parsed = matrix_from_json(v).unwrap();
        let fresh = subspace_matrix(&phi_generator(k + 1, 1, &p).unwrap(), 3).unwrap();
        assert_eq!(parsed, fresh, "B({}) round-trip", k + 1);
    }
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(exit_code(&braidtn(&["matrices", "--n", "1"])), 64);
    assert_eq!(exit_code(&braidtn(&["matrices", "--bogus"])), 64);
    assert_eq!(exit_code(&braidtn(&["matrices", "--mu", "x"])), 64);
    assert_eq!(exit_code(&braidtn(&["analyze", "--format", "latex"])), 64);
    assert_eq!(exit_code(&braidtn(&["nosuchcommand"])), 64);
}

#[test]
fn degenerate_parameters_exit_2() {
    assert_eq!(exit_code(&braidtn(&["matrices", "--n", "2", "--mu", "-1"])), 2);
    assert_eq!(exit_code(&braidtn(&["matrices", "--n", "2", "--mu", "0"])), 2);
    assert_eq!(exit_code(&braidtn(&["verify", "--n", "3", "--mu", "-1"])), 2);
}

#[test]
fn broken_params_file_fails_checks() {
    // beta_1 != beta_2 violates C1; the braid relations must fail with a
    // certificate and exit code 1.
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"n": 3,
            "c": [["1","1","1"],["1","1","1"],["1","1","1"]],
            "alpha": ["2","2","2"],
            "beta": ["1","5","1"]}}"#
    )
    .unwrap();
    let out = braidtn(&["verify", "--samples", "1", "--params-file", f.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed = doc["results"]["failed"].as_u64().unwrap();
    assert!(failed > 0);
    let has_certificate = doc["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["status"] == "fail" && e["certificate"].is_string());
    assert!(has_certificate, "failures must carry certificates");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let out = braidtn(&["matrices", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["config"]["n"], 2);
}

#[test]
fn latex_matches_source_layout() {
    let out = braidtn(&["matrices", "--n", "3", "--basis", "subspace", "--format", "latex"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("B(1)=\\left("));
    assert!(text.contains("B(2)=\\left("));
    assert!(text.contains("\\begin{array}{ccccccccc}"));
    assert!(text.contains("-\\frac{\\mu^{2}}{\\mu + 1}"));
}
