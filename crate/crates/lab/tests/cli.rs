use std::path::Path;
use std::process::{Command, Output};

const SMALL: &str = r#"{
    "schema_version": 1,
    "seed": 11,
    "polynomial": {"kind": "random-signs", "n_max": 10, "decay": 1.0},
    "p_values": [1, 2],
    "sigma_grid": [0.2, 0.4, 0.8],
    "T": 100,
    "mc_samples": 500,
    "suites": ["all"]
}"#;

fn hplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hplab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_config(dir: &Path) -> String {
    let p = dir.join("cfg.json");
    std::fs::write(&p, SMALL).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn eval_constant_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("f.json");
    std::fs::write(&poly, r#"{"n_max": 2, "coeffs": [[1, 0], [1, 0]]}"#).unwrap();
    let o = hplab(&["eval", "--sigma", "1", "--poly", poly.to_str().unwrap()]);
    assert!(o.status.success());
    let parts: Vec<f64> = stdout(&o).split_whitespace().map(|x| x.parse().unwrap()).collect();
    assert_eq!(parts, vec![1.5, 0.0]);
}

#[test]
fn eval_with_character_file() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("f.json");
    let chi = dir.path().join("chi.json");
    std::fs::write(&poly, r#"{"n_max": 2, "coeffs": [[0, 0], [1, 0]]}"#).unwrap();
    std::fs::write(&chi, r#"{"J": 1, "phases": [1.5707963267948966]}"#).unwrap();
    let o = hplab(&[
        "eval",
        "--sigma",
        "0",
        "--poly",
        poly.to_str().unwrap(),
        "--chi",
        chi.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let parts: Vec<f64> = stdout(&o).split_whitespace().map(|x| x.parse().unwrap()).collect();
    assert!(parts[0].abs() < 1e-15 && (parts[1] - 1.0).abs() < 1e-15, "{parts:?}");
}

#[test]
fn means_and_riesz_print_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path());
    let o = hplab(&["--config", &cfg, "means", "--method", "exact"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("method,p,sigma,T_or_samples,value,stderr\n"));
    assert_eq!(out.lines().count(), 1 + 3);
    let o = hplab(&["--config", &cfg, "riesz", "--k", "3", "--n", "10,100"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn verify_then_audit() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path());
    let out = dir.path().join("run");
    let o = hplab(&["--config", &cfg, "--out", out.to_str().unwrap(), "verify", "helson"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("wall time"));
    let csv = out.join("report.csv");
    let o = hplab(&["report", csv.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("fail 0"));
    let text = std::fs::read_to_string(&csv).unwrap();
    let tampered = text.replacen(",pass\n", ",fail\n", 1);
    std::fs::write(&csv, tampered).unwrap();
    let o = hplab(&["report", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch"));
}

#[test]
fn bad_inputs_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, SMALL.replace("\"T\": 100", "\"T\": -5")).unwrap();
    let o = hplab(&["--config", p.to_str().unwrap(), "verify", "all"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`T`"));
    let cfg = write_config(dir.path());
    let o = hplab(&["--config", &cfg, "verify", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}
