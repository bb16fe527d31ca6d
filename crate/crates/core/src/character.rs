//! Characters of the infinite torus restricted to the first `J` primes.
//!
//! A character `χ` is determined by its values `χ_j = e^{iθ_j}` at the primes
//! and acts completely multiplicatively: `χ(n) = Π χ_j^{α_j}` where `α` is the
//! Bohr lift of `n`. Only the angles are stored, so twisting a character any
//! number of times keeps it exactly unimodular.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::arith::Sieve;
use crate::math::{self, CompensatedComplex};
use crate::rng::{self, CounterRng};
use crate::series::DirichletPolynomial;
use crate::{Error, Result};

/// Where a sampled character came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    pub seed: u64,
    pub stream: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    phases: Vec<f64>,
    provenance: Option<Provenance>,
}

impl Character {
    /// Angles are reduced to `[0, 2π)`.
    pub fn from_phases(phases: Vec<f64>) -> Result<Self> {
        if let Some(&bad) = phases.iter().find(|x| !x.is_finite()) {
            return Err(Error::param("phase", bad, "must be finite"));
        }
        Ok(Self {
            phases: phases.into_iter().map(math::wrap_angle).collect(),
            provenance: None,
        })
    }

    /// `χ ≡ 1` on the first `j` primes.
    pub fn trivial(j: usize) -> Self {
        Self {
            phases: alloc::vec![0.0; j],
            provenance: None,
        }
    }

    /// `j` independent uniform angles; angle `k` is a pure function of `(seed, k)`.
    pub fn sample_haar(j: usize, seed: u64) -> Result<Self> {
        Self::sample_haar_stream(j, seed, rng::HAAR_STREAM)
    }

    pub fn sample_haar_stream(j: usize, seed: u64, stream: u64) -> Result<Self> {
        if j == 0 {
            return Err(Error::param("J", 0.0, "must be >= 1"));
        }
        let mut r = CounterRng::new(seed).stream(stream);
        let phases = (0..j).map(|_| rng::uniform_angle(&mut r)).collect();
        Ok(Self {
            phases,
            provenance: Some(Provenance { seed, stream }),
        })
    }

    pub fn with_provenance(mut self, provenance: Option<Provenance>) -> Self {
        self.provenance = provenance;
        self
    }

    /// Number of primes `J`.
    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }

    /// `χ_j = e^{iθ_j}` (zero-based `j`).
    pub fn value_at_prime(&self, j: usize) -> Option<Complex64> {
        self.phases.get(j).map(|&t| math::cis(t))
    }
}

/// Arithmetic context for characters: the sieve and `ln p_j` for the primes in play.
#[derive(Debug, Clone)]
pub struct Torus {
    sieve: Sieve,
    log_primes: Vec<f64>,
}

impl Torus {
    /// Supports `n ≤ n_max` (at least 2).
    pub fn new(n_max: u32) -> Result<Self> {
        Ok(Self::from_sieve(Sieve::new(n_max.max(2))?))
    }

    /// Supports `n ≤ n_max` and characters of length up to `primes`.
    pub fn with_primes(n_max: u32, primes: usize) -> Result<Self> {
        let s = Sieve::new(n_max.max(2))?;
        if s.primes().len() >= primes {
            return Ok(Self::from_sieve(s));
        }
        Ok(Self::from_sieve(Sieve::with_prime_count(primes)))
    }

    pub fn from_sieve(sieve: Sieve) -> Self {
        let log_primes = sieve.primes().iter().map(|&p| math::ln(f64::from(p))).collect();
        Self { sieve, log_primes }
    }

    pub fn sieve(&self) -> &Sieve {
        &self.sieve
    }

    /// Character length needed to evaluate every `n ≤ n_max`.
    pub fn required_length(&self, n_max: u64) -> usize {
        self.sieve.prime_count(n_max)
    }

    /// Haar character sized for a polynomial of degree `n_max`.
    pub fn sample_for(&self, n_max: u64, seed: u64) -> Result<Character> {
        Character::sample_haar(self.required_length(n_max).max(1), seed)
    }

    /// `χ(n) = exp(i Σ α_j θ_j)`.
    pub fn char_eval(&self, chi: &Character, n: u64) -> Result<Complex64> {
        let lift = self.sieve.bohr_lift(n)?;
        if lift.len() > chi.len() {
            return Err(Error::InsufficientCharacterLength {
                n,
                needed: lift.len(),
                available: chi.len(),
            });
        }
        let phase: f64 = lift.support().map(|(j, a)| f64::from(a) * chi.phases[j]).sum();
        Ok(math::cis(math::wrap_angle(phase)))
    }

    /// The Kronecker flow `χ ↦ χ·p^{-iτ}`: `θ_j ← θ_j - τ ln p_j (mod 2π)`.
    pub fn kronecker_twist(&self, chi: &Character, tau: f64) -> Result<Character> {
        if chi.len() > self.log_primes.len() {
            return Err(Error::param(
                "J",
                chi.len() as f64,
                "exceeds the primes known to this torus",
            ));
        }
        if !tau.is_finite() {
            return Err(Error::param("tau", tau, "must be finite"));
        }
        let phases = chi
            .phases
            .iter()
            .zip(&self.log_primes)
            .map(|(&th, &lp)| math::wrap_angle(th - tau * lp))
            .collect();
        Ok(Character {
            phases,
            provenance: chi.provenance,
        })
    }

    /// Lifts every index of `f` once, for repeated boundary evaluation.
    pub fn lift(&self, f: &DirichletPolynomial) -> Result<LiftedPolynomial> {
        let mut terms = Vec::new();
        let mut needed = 0;
        for (i, &a) in f.coeffs().iter().enumerate() {
            if a.re == 0.0 && a.im == 0.0 {
                continue;
            }
            let lift = self.sieve.bohr_lift(i as u64 + 1)?;
            needed = needed.max(lift.len());
            let support: Vec<(u32, u32)> = lift.support().map(|(j, e)| (j as u32, e)).collect();
            terms.push(LiftedTerm {
                n: i as u64 + 1,
                coeff: a,
                support,
            });
        }
        Ok(LiftedPolynomial { terms, needed })
    }

    /// `f_χ(s) = Σ a_n χ(n) n^{-s}`: coefficients `a_n χ(n)`.
    pub fn vertical_limit(&self, f: &DirichletPolynomial, chi: &Character) -> Result<DirichletPolynomial> {
        let lifted = self.lift(f)?;
        lifted.check(chi)?;
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); f.degree()];
        for term in &lifted.terms {
            coeffs[(term.n - 1) as usize] = term.coeff * term.character_value(chi);
        }
        Ok(f.map_coeffs(|n, _, _| coeffs[n - 1]))
    }

    /// The boundary function `f*(χ) = Σ a_n χ(n)`.
    pub fn boundary_eval(&self, f: &DirichletPolynomial, chi: &Character) -> Result<Complex64> {
        self.lift(f)?.boundary_eval(chi)
    }

    /// `f*(χ·p^{-iτ})`, the boundary function along the flow.
    pub fn flow_eval(&self, lifted: &LiftedPolynomial, chi: &Character, tau: f64) -> Result<Complex64> {
        lifted.check(chi)?;
        if !tau.is_finite() {
            return Err(Error::param("tau", tau, "must be finite"));
        }
        let z: Vec<Complex64> = chi.phases[..lifted.needed]
            .iter()
            .zip(&self.log_primes)
            .map(|(&th, &lp)| math::cis(math::wrap_angle(th - tau * lp)))
            .collect();
        Ok(lifted.eval_prime_values(&z))
    }

    /// `Σ a_n n^{-it}` for the lifted `f`, i.e. `f(it)` computed from `p^{-it}` at the primes.
    pub fn line_eval(&self, lifted: &LiftedPolynomial, t: f64) -> Result<Complex64> {
        if lifted.needed > self.log_primes.len() {
            return Err(Error::param(
                "J",
                lifted.needed as f64,
                "exceeds the primes known to this torus",
            ));
        }
        let z: Vec<Complex64> = self.log_primes[..lifted.needed]
            .iter()
            .map(|&lp| math::cis(math::wrap_angle(-t * lp)))
            .collect();
        Ok(lifted.eval_prime_values(&z))
    }
}

#[derive(Debug, Clone)]
struct LiftedTerm {
    n: u64,
    coeff: Complex64,
    support: Vec<(u32, u32)>,
}

impl LiftedTerm {
    /// `Π z_j^{α_j}` from the values at the primes.
    #[inline]
    fn product(&self, z: &[Complex64]) -> Complex64 {
        let mut v = Complex64::new(1.0, 0.0);
        for &(j, a) in &self.support {
            let zj = z[j as usize];
            for _ in 0..a {
                v *= zj;
            }
        }
        v
    }

    #[inline]
    fn character_value(&self, chi: &Character) -> Complex64 {
        let phase: f64 = self
            .support
            .iter()
            .map(|&(j, a)| f64::from(a) * chi.phases[j as usize])
            .sum();
        math::cis(math::wrap_angle(phase))
    }
}

/// A polynomial whose non-zero indices have been factorized.
#[derive(Debug, Clone)]
pub struct LiftedPolynomial {
    terms: Vec<LiftedTerm>,
    needed: usize,
}

impl LiftedPolynomial {
    /// Character length required by the support.
    pub fn required_length(&self) -> usize {
        self.needed
    }

    pub(crate) fn check(&self, chi: &Character) -> Result<()> {
        if self.needed > chi.len() {
            let n = self
                .terms
                .iter()
                .find(|t| t.support.last().map_or(0, |&(j, _)| j as usize + 1) > chi.len())
                .map_or(0, |t| t.n);
            return Err(Error::InsufficientCharacterLength {
                n,
                needed: self.needed,
                available: chi.len(),
            });
        }
        Ok(())
    }

    /// `Σ a_n χ(n)` summed in ascending `n` with compensation.
    pub fn boundary_eval(&self, chi: &Character) -> Result<Complex64> {
        self.check(chi)?;
        let z: Vec<Complex64> = chi.phases[..self.needed].iter().map(|&th| math::cis(th)).collect();
        Ok(self.eval_prime_values(&z))
    }

    /// `Σ a_n Π z_j^{α_j}` given `z_j` for `j < required_length()`, ascending `n`.
    pub fn eval_prime_values(&self, z: &[Complex64]) -> Complex64 {
        let mut acc = CompensatedComplex::new();
        for t in &self.terms {
            acc.add(t.coeff * t.product(z));
        }
        acc.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_2;

    #[test]
    fn sampling_is_deterministic() {
        let a = Character::sample_haar(12, 99).unwrap();
        let b = Character::sample_haar(12, 99).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, Character::sample_haar(12, 100).unwrap());
        assert!(Character::sample_haar(0, 1).is_err());
        // prefix property: angle j depends only on (seed, j)
        let c = Character::sample_haar(5, 99).unwrap();
        assert_eq!(&a.phases()[..5], c.phases());
    }

    #[test]
    fn char_eval_examples() {
        let torus = Torus::new(100).unwrap();
        let chi = Character::sample_haar(25, 3).unwrap();
        assert_eq!(torus.char_eval(&chi, 1).unwrap(), Complex64::new(1.0, 0.0));
        let one = Character::trivial(25);
        for n in 1..=100 {
            let v = torus.char_eval(&one, n).unwrap();
            assert_eq!(v, Complex64::new(1.0, 0.0));
        }
        let mut phases = alloc::vec![0.0; 3];
        phases[0] = FRAC_PI_2;
        let i_chi = Character::from_phases(phases).unwrap();
        let v = torus.char_eval(&i_chi, 4).unwrap();
        assert!((v - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn insufficient_length_is_reported() {
        let torus = Torus::new(100).unwrap();
        let chi = Character::trivial(2);
        assert!(torus.char_eval(&chi, 6).is_ok());
        assert_eq!(
            torus.char_eval(&chi, 10),
            Err(Error::InsufficientCharacterLength {
                n: 10,
                needed: 3,
                available: 2
            })
        );
        let f = DirichletPolynomial::zeta_truncation(10).unwrap();
        assert!(matches!(
            torus.vertical_limit(&f, &chi),
            Err(Error::InsufficientCharacterLength { .. })
        ));
    }

    #[test]
    fn twist_identity_and_group_action() {
        let torus = Torus::new(100).unwrap();
        let chi = Character::sample_haar(25, 11).unwrap();
        assert_eq!(torus.kronecker_twist(&chi, 0.0).unwrap(), chi);
        let a = torus
            .kronecker_twist(&torus.kronecker_twist(&chi, 0.7).unwrap(), -2.2)
            .unwrap();
        let b = torus.kronecker_twist(&chi, -1.5).unwrap();
        for (x, y) in a.phases().iter().zip(b.phases()) {
            let d = math::wrap_angle(x - y);
            assert!(d < 1e-12 || core::f64::consts::TAU - d < 1e-12);
        }
    }

    #[test]
    fn twist_at_sixty() {
        let torus = Torus::new(100).unwrap();
        let chi = Character::sample_haar(25, 5).unwrap();
        let tw = torus.kronecker_twist(&chi, 1.7).unwrap();
        // factor-by-factor: 60 = 2^2·3·5
        let mut expected = torus.char_eval(&chi, 60).unwrap();
        for (p, e) in [(2.0f64, 2), (3.0, 1), (5.0, 1)] {
            for _ in 0..e {
                expected *= math::cis(-1.7 * math::ln(p));
            }
        }
        assert!((torus.char_eval(&tw, 60).unwrap() - expected).norm() < 1e-12);
    }

    #[test]
    fn boundary_eval_examples() {
        let torus = Torus::new(50).unwrap();
        let f = DirichletPolynomial::from_real(&[1.0, -2.0, 0.5, 0.0, 3.0]).unwrap();
        let one = Character::trivial(3);
        let v = torus.boundary_eval(&f, &one).unwrap();
        assert!((v - Complex64::new(2.5, 0.0)).norm() < 1e-15);
        let c = DirichletPolynomial::constant(Complex64::new(1.0, 0.0));
        let chi = Character::sample_haar(3, 8).unwrap();
        assert_eq!(torus.boundary_eval(&c, &chi).unwrap(), Complex64::new(1.0, 0.0));
    }
}
