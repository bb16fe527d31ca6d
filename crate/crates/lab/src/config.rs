//! Experiment configuration (JSON, `schema_version` 1).

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::suites::SUITES;

pub const SCHEMA_VERSION: u32 = 1;

const MAX_N: u32 = 1_000_000;
const MAX_T: f64 = 1e6;
const MAX_SAMPLES: u64 = 10_000_000;
const MIN_SAMPLES: u64 = 100;

/// A validation or parse failure, naming the offending field.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("config field `{path}`: {message}")]
pub struct ConfigError {
    pub path: String,
    pub message: String,
}

impl ConfigError {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            path: path.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    RandomGaussian,
    RandomSigns,
    ZetaTruncation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolynomialSpec {
    /// `a_n = coeffs[n-1]` as `[re, im]` pairs.
    Explicit { n_max: u32, coeffs: Vec<[f64; 2]> },
    Generator {
        kind: GeneratorKind,
        n_max: u32,
        #[serde(default)]
        decay: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    pub seed: u64,
    pub polynomial: PolynomialSpec,
    pub p_values: Vec<f64>,
    pub sigma_grid: Vec<f64>,
    #[serde(rename = "T")]
    pub horizon: f64,
    pub mc_samples: u64,
    pub suites: Vec<String>,
    #[serde(default = "default_output")]
    pub output_path: PathBuf,
}

fn default_output() -> PathBuf {
    PathBuf::from("hplab-report")
}

impl Default for ExperimentConfig {
    /// Seeded Gaussian polynomial of degree 50 with decay 0.6, every suite.
    fn default() -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            seed: 20_240_501,
            polynomial: PolynomialSpec::Generator {
                kind: GeneratorKind::RandomGaussian,
                n_max: 50,
                decay: 0.6,
            },
            p_values: vec![1.0, 2.0, 4.0],
            sigma_grid: (1..=10).map(|i| i as f64 / 10.0).collect(),
            horizon: 1e4,
            mc_samples: 100_000,
            suites: SUITES.iter().map(|s| s.to_string()).collect(),
            output_path: default_output(),
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| {
            let path = field_from_serde(&e.to_string()).unwrap_or_else(|| "<root>".into());
            ConfigError::new(path, e.to_string())
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
        Ok(Self::from_json(&text)?)
    }

    /// Canonical serialization.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    /// Canonical serialization of the inputs only (no `output_path`), used
    /// for report digests so that moving the output does not change them.
    pub fn inputs_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("config serializes");
        if let Some(m) = v.as_object_mut() {
            m.remove("output_path");
        }
        v.to_string()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(ConfigError::new(
                "schema_version",
                format!("expected {SCHEMA_VERSION}, got {}", self.schema_version),
            ));
        }
        match &self.polynomial {
            PolynomialSpec::Explicit { n_max, coeffs } => {
                check_n_max(*n_max)?;
                if coeffs.len() != *n_max as usize {
                    return Err(ConfigError::new(
                        "polynomial.coeffs",
                        format!("has {} entries, n_max is {n_max}", coeffs.len()),
                    ));
                }
                if let Some(i) = coeffs.iter().position(|c| !(c[0].is_finite() && c[1].is_finite())) {
                    return Err(ConfigError::new(format!("polynomial.coeffs[{i}]"), "not finite"));
                }
            }
            PolynomialSpec::Generator { n_max, decay, .. } => {
                check_n_max(*n_max)?;
                if !(decay.is_finite() && *decay >= 0.0) {
                    return Err(ConfigError::new("polynomial.decay", "must be finite and >= 0"));
                }
            }
        }
        if self.p_values.is_empty() {
            return Err(ConfigError::new("p_values", "must not be empty"));
        }
        for (i, p) in self.p_values.iter().enumerate() {
            if !(p.is_finite() && *p >= 1.0) {
                return Err(ConfigError::new(format!("p_values[{i}]"), "must be finite and >= 1"));
            }
        }
        if self.sigma_grid.len() < 3 {
            return Err(ConfigError::new("sigma_grid", "needs at least 3 points"));
        }
        for (i, s) in self.sigma_grid.iter().enumerate() {
            if !(s.is_finite() && *s > 0.0) {
                return Err(ConfigError::new(format!("sigma_grid[{i}]"), "must be finite and > 0"));
            }
            if i > 0 && *s <= self.sigma_grid[i - 1] {
                return Err(ConfigError::new(format!("sigma_grid[{i}]"), "must be increasing"));
            }
        }
        if !(self.horizon.is_finite() && self.horizon >= 1.0 && self.horizon <= MAX_T) {
            return Err(ConfigError::new("T", format!("must lie in [1, {MAX_T}]")));
        }
        if !(MIN_SAMPLES..=MAX_SAMPLES).contains(&self.mc_samples) {
            return Err(ConfigError::new(
                "mc_samples",
                format!("must lie in [{MIN_SAMPLES}, {MAX_SAMPLES}]"),
            ));
        }
        for (i, s) in self.suites.iter().enumerate() {
            if s != "all" && !SUITES.contains(&s.as_str()) {
                return Err(ConfigError::new(format!("suites[{i}]"), format!("unknown suite `{s}`")));
            }
        }
        Ok(())
    }

    /// Suites to run, with `all` expanded, in canonical order.
    pub fn suite_list(&self) -> Vec<&'static str> {
        let all = self.suites.iter().any(|s| s == "all");
        SUITES
            .iter()
            .copied()
            .filter(|s| all || self.suites.iter().any(|x| x == s))
            .collect()
    }
}

fn check_n_max(n: u32) -> Result<(), ConfigError> {
    if n == 0 || n > MAX_N {
        return Err(ConfigError::new(
            "polynomial.n_max",
            format!("must lie in [1, {MAX_N}]"),
        ));
    }
    Ok(())
}

/// Best-effort field name from a serde message such as "missing field `T`".
fn field_from_serde(msg: &str) -> Option<String> {
    let start = msg.find('`')? + 1;
    let end = start + msg[start..].find('`')?;
    Some(msg[start..end].to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid_and_roundtrips() {
        let cfg = ExperimentConfig::default();
        cfg.validate().unwrap();
        let back = ExperimentConfig::from_json(&cfg.canonical_json()).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn negative_horizon_names_t() {
        let mut v: serde_json::Value = serde_json::from_str(&ExperimentConfig::default().canonical_json()).unwrap();
        v["T"] = serde_json::json!(-5.0);
        let err = ExperimentConfig::from_json(&v.to_string()).unwrap_err();
        assert_eq!(err.path, "T");
    }

    #[test]
    fn missing_field_is_named() {
        let mut v: serde_json::Value = serde_json::from_str(&ExperimentConfig::default().canonical_json()).unwrap();
        v.as_object_mut().unwrap().remove("mc_samples");
        let err = ExperimentConfig::from_json(&v.to_string()).unwrap_err();
        assert_eq!(err.path, "mc_samples");
    }
}
