//! Polynomial generators driven by the counter RNG.

use dirichlet_hp::rng::{CounterRng, POLYNOMIAL_STREAM};
use dirichlet_hp::{Complex64, DirichletPolynomial};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::config::{GeneratorKind, PolynomialSpec};

/// Builds the polynomial described by `spec`; random kinds draw from
/// stream [`POLYNOMIAL_STREAM`] of `seed`, in order of `n`.
pub fn generate_polynomial(spec: &PolynomialSpec, seed: u64) -> dirichlet_hp::Result<DirichletPolynomial> {
    match spec {
        PolynomialSpec::Explicit { coeffs, .. } => {
            DirichletPolynomial::new(coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect())
        }
        PolynomialSpec::Generator { kind, n_max, decay } => {
            let mut rng = CounterRng::new(seed).stream(POLYNOMIAL_STREAM);
            let coeffs = (1..=*n_max)
                .map(|n| {
                    let w = (n as f64).powf(-decay);
                    match kind {
                        GeneratorKind::RandomGaussian => {
                            let g1: f64 = rng.sample(StandardNormal);
                            let g2: f64 = rng.sample(StandardNormal);
                            Complex64::new(g1, g2) * (w / std::f64::consts::SQRT_2)
                        }
                        GeneratorKind::RandomSigns => Complex64::new(if rng.random::<bool>() { w } else { -w }, 0.0),
                        GeneratorKind::ZetaTruncation => Complex64::new(w, 0.0),
                    }
                })
                .collect();
            DirichletPolynomial::new(coeffs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: GeneratorKind, n_max: u32, decay: f64) -> PolynomialSpec {
        PolynomialSpec::Generator { kind, n_max, decay }
    }

    #[test]
    fn reproducible() {
        let s = spec(GeneratorKind::RandomGaussian, 30, 0.6);
        assert_eq!(generate_polynomial(&s, 9).unwrap(), generate_polynomial(&s, 9).unwrap());
        assert_ne!(
            generate_polynomial(&s, 9).unwrap(),
            generate_polynomial(&s, 10).unwrap()
        );
    }

    #[test]
    fn zeta_truncation_value() {
        let f = generate_polynomial(&spec(GeneratorKind::ZetaTruncation, 4, 0.0), 0).unwrap();
        let v = f.eval(Complex64::new(2.0, 0.0));
        assert!((v.re - 205.0 / 144.0).abs() < 1e-15);
    }

    #[test]
    fn signs_have_exact_moduli() {
        let f = generate_polynomial(&spec(GeneratorKind::RandomSigns, 64, 0.75), 3).unwrap();
        for (i, a) in f.coeffs().iter().enumerate() {
            assert_eq!(a.im, 0.0);
            assert_eq!(a.re.abs(), ((i + 1) as f64).powf(-0.75));
        }
        assert!(f.coeffs().iter().any(|a| a.re < 0.0));
        assert!(f.coeffs().iter().any(|a| a.re > 0.0));
    }
}
