//! JSON file formats for polynomials and characters.

use std::path::Path;

use anyhow::Context;
use dirichlet_hp::{Character, Complex64, DirichletPolynomial, Provenance};
use serde::{Deserialize, Serialize};

/// `{"n_max": N, "coeffs": [[re, im], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialFile {
    pub n_max: usize,
    pub coeffs: Vec<[f64; 2]>,
}

impl PolynomialFile {
    pub fn from_polynomial(f: &DirichletPolynomial) -> Self {
        Self {
            n_max: f.degree(),
            coeffs: f.coeffs().iter().map(|a| [a.re, a.im]).collect(),
        }
    }

    pub fn to_polynomial(&self) -> anyhow::Result<DirichletPolynomial> {
        anyhow::ensure!(
            self.coeffs.len() == self.n_max,
            "n_max is {} but {} coefficients were given",
            self.n_max,
            self.coeffs.len()
        );
        Ok(DirichletPolynomial::new(
            self.coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect(),
        )?)
    }
}

/// `{"J": J, "phases": [θ_1, ...], "seed": s}`; `seed` is informational.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterFile {
    #[serde(rename = "J")]
    pub j: usize,
    pub phases: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CharacterFile {
    pub fn from_character(chi: &Character) -> Self {
        Self {
            j: chi.len(),
            phases: chi.phases().to_vec(),
            seed: chi.provenance().map(|p| p.seed),
        }
    }

    pub fn to_character(&self) -> anyhow::Result<Character> {
        anyhow::ensure!(
            self.phases.len() == self.j,
            "J is {} but {} phases were given",
            self.j,
            self.phases.len()
        );
        let chi = Character::from_phases(self.phases.clone())?;
        Ok(chi.with_provenance(self.seed.map(|seed| Provenance {
            seed,
            stream: dirichlet_hp::rng::HAAR_STREAM,
        })))
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_roundtrip() {
        let f = DirichletPolynomial::new(vec![Complex64::new(1.0, -0.5), Complex64::new(0.0, 2.0)]).unwrap();
        let file = PolynomialFile::from_polynomial(&f);
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(text, r#"{"n_max":2,"coeffs":[[1.0,-0.5],[0.0,2.0]]}"#);
        let back: PolynomialFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_polynomial().unwrap(), f);
    }

    #[test]
    fn character_roundtrip() {
        let chi = Character::sample_haar(5, 77).unwrap();
        let file = CharacterFile::from_character(&chi);
        let back: CharacterFile = serde_json::from_str(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(back.to_character().unwrap().phases(), chi.phases());
        assert_eq!(back.seed, Some(77));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let file = PolynomialFile {
            n_max: 3,
            coeffs: vec![[1.0, 0.0]],
        };
        assert!(file.to_polynomial().is_err());
    }
}
