//! End-to-end tests against the compiled binary: output shapes, exit-code
//! contract, config handling, and export determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sternpoly"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8_lossy(&out.stdout).lines().map(str::to_string).collect()
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("sternpoly-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn poly_prints_lambda_form_and_coefficients() {
    let out = run(&["poly", "14"]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "λ+λ²+λ³");
    assert_eq!(lines[1], "coeffs: 0,1,1,1");

    let one = run(&["poly", "1"]);
    assert_eq!(stdout_lines(&one)[0], "1");

    let zero = run(&["poly", "0"]);
    let lines = stdout_lines(&zero);
    assert_eq!(lines[0], "0");
    assert_eq!(lines[1], "coeffs: 0");
}

#[test]
fn eval_prints_seventeen_digit_pair() {
    let out = run(&["eval", "14", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_lines(&out)[0], "1.4000000000000000e1 0.0000000000000000e0");
}

#[test]
fn eval_accepts_leading_minus_and_complex_points() {
    // S_135 = (1+λ)³(1+λ²) vanishes at −1
    let out = run(&["eval", "135", "-1"]);
    assert!(out.status.success(), "negative arguments must parse");
    assert_eq!(stdout_lines(&out)[0], "0.0000000000000000e0 0.0000000000000000e0");

    let complex = run(&["eval", "3", "-1+2i"]);
    assert!(complex.status.success());
    assert_eq!(stdout_lines(&complex)[0], "0.0000000000000000e0 2.0000000000000000e0");
}

#[test]
fn seq_prints_diatomic_values() {
    let out = run(&["seq", "10"]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[0], "0 0");
    assert_eq!(lines[9], "9 4");
    assert_eq!(lines[10], "10 3");
}

#[test]
fn bracket_encodes_and_decodes() {
    let enc = run(&["bracket", "225"]);
    assert!(enc.status.success());
    assert_eq!(stdout_lines(&enc)[0], "[[3,5]]");

    let dec = run(&["bracket", "[[3,5]]"]);
    assert!(dec.status.success());
    assert_eq!(stdout_lines(&dec)[0], "225");

    let even = run(&["bracket", "6"]);
    assert_eq!(even.status.code(), Some(1));
}

#[test]
fn cf_matches_direct_ratio() {
    let out = run(&["cf", "[[2,3]]", "2"]);
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let lines = stdout_lines(&out);
    // 3 + 4/7 = 25/7
    assert!(lines[0].starts_with("cf     3.57142857142857"), "{}", lines[0]);
    assert!(lines[1].starts_with("direct 3.57142857142857"), "{}", lines[1]);
}

#[test]
fn verify_exit_codes_follow_the_contract() {
    let pass = run(&["verify", "table3"]);
    assert_eq!(pass.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&pass.stdout).starts_with("[PASS] table3"));

    // the slimmer region at alpha = 0.503 must be escaped: exit 2
    let near = run(&["verify", "azscan", "--z", "1+2.5i", "--alpha", "0.503", "--grid", "64x64"]);
    assert_eq!(near.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&near.stdout).starts_with("[FAIL] azscan"));

    let usage = run(&["verify", "definitely-not-a-suite"]);
    assert_eq!(usage.status.code(), Some(1));

    let bad_flag = run(&["verify", "roots", "--n-max", "not-a-number"]);
    assert_eq!(bad_flag.status.code(), Some(1));
}

#[test]
fn verify_roots_small_scan_passes_and_reports() {
    let out_path = tmp_path("roots.json");
    let out = run(&["verify", "roots", "--n-max", "1024", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["n_max"], 1024);
    assert_eq!(report["two_disk_violations"].as_array().unwrap().len(), 0);
    assert!(report["min_dist_to_two"].as_f64().unwrap() > 1.0);
    std::fs::remove_file(&out_path).ok();
}

#[test]
fn config_file_fills_in_flags_and_flags_win() {
    let cfg = tmp_path("cfg.txt");
    std::fs::write(&cfg, "n-max = 255\n# comment line\n").unwrap();
    let out_path = tmp_path("cfg-roots.json");

    let from_cfg = run(&[
        "verify", "roots",
        "--config", cfg.to_str().unwrap(),
        "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(from_cfg.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["n_max"], 255, "config supplies n-max");

    let flag_wins = run(&[
        "verify", "roots",
        "--config", cfg.to_str().unwrap(),
        "--n-max", "127",
        "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(flag_wins.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["n_max"], 127, "explicit flag overrides config");

    let unknown_key = tmp_path("bad-cfg.txt");
    std::fs::write(&unknown_key, "n-mx = 255\n").unwrap();
    let bad = run(&["verify", "roots", "--config", unknown_key.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));

    std::fs::remove_file(&cfg).ok();
    std::fs::remove_file(&out_path).ok();
    std::fs::remove_file(&unknown_key).ok();
}

#[test]
fn export_fig1_is_byte_identical_across_worker_counts() {
    let a = tmp_path("fig1-a.csv");
    let b = tmp_path("fig1-b.csv");
    let ra = run(&["export", "fig1", "--n-max", "255", "--out", a.to_str().unwrap()]);
    let rb = run(&[
        "export", "fig1", "--n-max", "255", "--workers", "2", "--out", b.to_str().unwrap(),
    ]);
    assert!(ra.status.success() && rb.status.success());
    let ca = std::fs::read(&a).unwrap();
    let cb = std::fs::read(&b).unwrap();
    assert_eq!(ca, cb, "export must not depend on worker count");
    let text = String::from_utf8(ca).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,degree,root_re,root_im,residual");
    let first = lines.next().unwrap();
    assert_eq!(first.split(',').count(), 5);
    for row in text.lines().skip(1) {
        let re: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        let im: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
        assert!((-4.0..=1.0).contains(&re) && im.abs() <= 3.0, "window filter: {row}");
    }
    std::fs::remove_file(&a).ok();
    std::fs::remove_file(&b).ok();
}

#[test]
fn export_ratio_grids_carry_points_and_boundary() {
    let p2 = tmp_path("fig2.json");
    let r2 = run(&["export", "fig2", "--grid", "16x16", "--out", p2.to_str().unwrap()]);
    assert!(r2.status.success());
    let d: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p2).unwrap()).unwrap();
    assert_eq!(d["points"].as_array().unwrap().len(), 256);
    assert!(!d["boundary"].as_array().unwrap().is_empty());
    assert_eq!(d["violations"], 0, "the enclosed grid has no escapes");

    let p5 = tmp_path("fig5.json");
    let r5 = run(&["export", "fig5", "--grid", "16x16", "--out", p5.to_str().unwrap()]);
    assert!(r5.status.success());
    let d: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p5).unwrap()).unwrap();
    assert!(d["violations"].as_u64().unwrap() > 0, "the near-miss grid escapes");

    let bad = run(&["export", "fig9"]);
    assert_eq!(bad.status.code(), Some(1));

    std::fs::remove_file(&p2).ok();
    std::fs::remove_file(&p5).ok();
}
