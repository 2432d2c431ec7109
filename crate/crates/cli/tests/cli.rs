//! Binary-level behavior: flag/file precedence, output formats, exit codes.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_emdirac")
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("emdirac_cli_test_{name}"))
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn algebra_suite_passes_with_zero_exit() {
    let out = run(&["verify", "algebra", "--fixed-clock"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"suite\": \"algebra\""));
}

#[test]
fn csv_format_emits_one_row_per_check() {
    let out = run(&["verify", "algebra", "--fixed-clock", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "suite,id,equation,status,measured,tolerance,expected_from"
    );
    assert_eq!(lines.count(), 4);
}

#[test]
fn unknown_suite_fails_without_partial_output() {
    let path = tmp("no_partial.json");
    let _ = fs::remove_file(&path);
    let out = run(&["verify", "not-a-suite", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!path.exists(), "no file may be written on a usage error");
}

#[test]
fn impossible_tolerance_turns_the_exit_code_red() {
    // the two invariant routes differ by genuine roundoff, so a 1e-30 bound
    // cannot hold
    let out = run(&[
        "verify",
        "nonlinear",
        "--fixed-clock",
        "--tol",
        "nonlinear.invariant-identity=1e-30",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stderr);
    assert!(text.contains("[fail] nonlinear.invariant-identity"));
}

#[test]
fn flags_override_the_config_file() {
    let config = tmp("override.cfg");
    fs::write(&config, "seed = 5\nn = 16,32\nfixed-clock = true\n").unwrap();
    let out = run(&[
        "verify",
        "algebra",
        "--config",
        config.to_str().unwrap(),
        "--seed",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"seed\": 9"), "flag seed must win: {text}");
    let _ = fs::remove_file(&config);
}

#[test]
fn bad_config_key_is_a_usage_error() {
    let config = tmp("bad_key.cfg");
    fs::write(&config, "not_a_key = 1\n").unwrap();
    let out = run(&["verify", "algebra", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let _ = fs::remove_file(&config);
}

#[test]
fn converge_emits_a_table() {
    let out = run(&[
        "converge",
        "evolution.static-zero",
        "--n",
        "16,32,64",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,error,order");
    assert!(text.contains("exact"));
}

#[test]
fn converge_first_order_self_test() {
    let out = run(&[
        "converge",
        "evolution.advect-m0",
        "--first-order",
        "--n",
        "64,128,256",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let last = text.lines().last().unwrap();
    let order: f64 = last.rsplit(',').next().unwrap().parse().unwrap();
    assert!((order - 1.0).abs() < 0.2, "order {order}");
}

#[test]
fn converge_rejects_two_sizes() {
    let out = run(&["converge", "evolution.advect-m0", "--n", "64,128"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn profile_writes_the_radial_columns() {
    let out = run(&["profile", "born-infeld", "--points", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("r_over_r0,d,e,eps_eff\n"));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn export_grid_has_the_component_columns() {
    let out = run(&["export", "grid", "--n", "16", "--steps", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("y,re_psi1,im_psi1,re_psi2,im_psi2,re_psi3,im_psi3,re_psi4,im_psi4\n"));
    assert_eq!(text.lines().count(), 17);
}

#[test]
fn gaussian_units_run_clean_on_a_small_suite() {
    let out = run(&[
        "verify",
        "plane-waves",
        "--units",
        "gaussian",
        "--fixed-clock",
        "--paper-literal",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"units\": \"gaussian\""));
    assert!(text.contains("literal-dispersion"));
}
