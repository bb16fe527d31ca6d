use dirichlet_hp_lab::config::{GeneratorKind, PolynomialSpec};
use dirichlet_hp_lab::ExperimentConfig;

fn base() -> serde_json::Value {
    serde_json::from_str(&ExperimentConfig::default().canonical_json()).unwrap()
}

fn error_path(v: serde_json::Value) -> String {
    ExperimentConfig::from_json(&v.to_string()).unwrap_err().path
}

#[test]
fn default_config_parses_back() {
    let cfg = ExperimentConfig::from_json(&base().to_string()).unwrap();
    assert_eq!(cfg, ExperimentConfig::default());
    assert_eq!(cfg.suite_list().len(), 7);
    assert!(matches!(
        cfg.polynomial,
        PolynomialSpec::Generator {
            kind: GeneratorKind::RandomGaussian,
            n_max: 50,
            ..
        }
    ));
}

#[test]
fn invalid_fields_are_named() {
    let cases: Vec<(&str, serde_json::Value, &str)> = vec![
        ("T", serde_json::json!(-1.0), "T"),
        ("T", serde_json::json!(2e6), "T"),
        ("mc_samples", serde_json::json!(10), "mc_samples"),
        ("p_values", serde_json::json!([2, 0.5]), "p_values[1]"),
        ("sigma_grid", serde_json::json!([0.1, 0.3, 0.2]), "sigma_grid[2]"),
        ("sigma_grid", serde_json::json!([0.1, 0.2]), "sigma_grid"),
        ("suites", serde_json::json!(["carlson", "bogus"]), "suites[1]"),
        ("schema_version", serde_json::json!(2), "schema_version"),
    ];
    for (field, value, expected) in cases {
        let mut v = base();
        v[field] = value;
        assert_eq!(error_path(v), expected, "field {field}");
    }
}

#[test]
fn explicit_polynomial_length_is_checked() {
    let mut v = base();
    v["polynomial"] = serde_json::json!({"n_max": 3, "coeffs": [[1, 0], [0, 1]]});
    assert_eq!(error_path(v), "polynomial.coeffs");
}

#[test]
fn unknown_and_missing_fields_are_rejected() {
    let mut v = base();
    v["extra"] = serde_json::json!(1);
    assert!(ExperimentConfig::from_json(&v.to_string()).is_err());
    let mut v = base();
    v.as_object_mut().unwrap().remove("seed");
    assert_eq!(error_path(v), "seed");
}

#[test]
fn all_expands_in_canonical_order() {
    let mut cfg = ExperimentConfig {
        suites: vec!["norms".into(), "carlson".into()],
        ..ExperimentConfig::default()
    };
    assert_eq!(cfg.suite_list(), vec!["carlson", "norms"]);
    cfg.suites = vec!["all".into()];
    assert_eq!(cfg.suite_list().len(), 7);
}
