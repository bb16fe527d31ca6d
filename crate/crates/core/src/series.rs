//! Finite Dirichlet polynomials `f(s) = Σ_{n=1}^N a_n n^{-s}`.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::math::{self, CompensatedComplex};
use crate::{Error, Result};

/// A point `s = σ + it` of the closed right half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    pub sigma: f64,
    pub t: f64,
}

impl HalfPlanePoint {
    /// A point with `σ ≥ 0`.
    pub fn new(sigma: f64, t: f64) -> Result<Self> {
        if !(sigma.is_finite() && sigma >= 0.0) {
            return Err(Error::param("sigma", sigma, "must be finite and >= 0"));
        }
        if !t.is_finite() {
            return Err(Error::param("t", t, "must be finite"));
        }
        Ok(Self { sigma, t })
    }

    /// A point of the open half-plane, `σ > 0`.
    pub fn interior(sigma: f64, t: f64) -> Result<Self> {
        let s = Self::new(sigma, t)?;
        s.require_interior()?;
        Ok(s)
    }

    pub fn require_interior(&self) -> Result<()> {
        if self.sigma > 0.0 {
            Ok(())
        } else {
            Err(Error::param("sigma", self.sigma, "must be > 0"))
        }
    }

    /// Membership in `ℂ_κ = {σ > κ}`.
    pub fn in_half_plane(&self, kappa: f64) -> bool {
        self.sigma > kappa
    }

    pub fn modulus(&self) -> f64 {
        math::hypot(self.sigma, self.t)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }
}

impl From<HalfPlanePoint> for Complex64 {
    fn from(s: HalfPlanePoint) -> Self {
        s.to_complex()
    }
}

/// Dense coefficients `a_1..a_N` with a shared `ln n` table.
#[derive(Debug, Clone)]
pub struct DirichletPolynomial {
    coeffs: Vec<Complex64>,
    log_n: Arc<[f64]>,
}

fn log_table(len: usize) -> Arc<[f64]> {
    (1..=len).map(|n| math::ln(n as f64)).collect()
}

impl PartialEq for DirichletPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl DirichletPolynomial {
    /// Builds `Σ coeffs[n-1]·n^{-s}`. Trailing zeros are kept and count toward `N`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        if let Some(i) = coeffs.iter().position(|a| !(a.re.is_finite() && a.im.is_finite())) {
            return Err(Error::NonFiniteCoefficient { index: i + 1 });
        }
        let log_n = log_table(coeffs.len());
        Ok(Self { coeffs, log_n })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    /// The constant series `c`.
    pub fn constant(c: Complex64) -> Self {
        Self::new(alloc::vec![c]).expect("finite constant")
    }

    /// `c·n^{-s}` padded with zeros below `n`.
    pub fn monomial(n: usize, c: Complex64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); n];
        coeffs[n - 1] = c;
        Self::new(coeffs)
    }

    /// `Σ_{n≤N} n^{-s}`.
    pub fn zeta_truncation(n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::EmptyPolynomial);
        }
        Self::new(alloc::vec![Complex64::new(1.0, 0.0); n_max])
    }

    /// Declared length `N`.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `a_n` for `1 ≤ n ≤ N`, zero beyond.
    pub fn coeff(&self, n: usize) -> Complex64 {
        if n == 0 {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs.get(n - 1).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// `ln n` for `n = 1..N`, indexed from zero.
    pub fn log_table(&self) -> &[f64] {
        &self.log_n
    }

    /// `f(s)` by direct compensated summation in ascending `n`.
    pub fn eval(&self, s: Complex64) -> Complex64 {
        let mut acc = CompensatedComplex::new();
        for (a, &l) in self.coeffs.iter().zip(self.log_n.iter()) {
            if a.re == 0.0 && a.im == 0.0 {
                continue;
            }
            let mag = math::exp(-s.re * l);
            acc.add(*a * math::cis(-s.im * l) * mag);
        }
        acc.value()
    }

    pub fn eval_at(&self, s: HalfPlanePoint) -> Complex64 {
        self.eval(s.to_complex())
    }

    /// Coefficients mapped by `g(n, a_n)`; the `ln n` table is shared.
    pub fn map_coeffs<F>(&self, mut g: F) -> Self
    where
        F: FnMut(usize, Complex64, f64) -> Complex64,
    {
        let coeffs = self
            .coeffs
            .iter()
            .zip(self.log_n.iter())
            .enumerate()
            .map(|(i, (&a, &l))| g(i + 1, a, l))
            .collect();
        Self {
            coeffs,
            log_n: Arc::clone(&self.log_n),
        }
    }

    /// `H_κ f(s) = f(s + κ)`: coefficients `a_n n^{-κ}`.
    pub fn translate_h(&self, kappa: f64) -> Result<Self> {
        if !(kappa.is_finite() && kappa >= 0.0) {
            return Err(Error::param("kappa", kappa, "must be finite and >= 0"));
        }
        Ok(self.map_coeffs(|_, a, l| a * math::exp(-kappa * l)))
    }

    /// `V_τ f(s) = f(s + iτ)`: coefficients `a_n n^{-iτ}`.
    pub fn translate_v(&self, tau: f64) -> Self {
        self.map_coeffs(|_, a, l| a * math::cis(-tau * l))
    }

    /// `s ↦ f(s + w) - f(s)` for a complex shift `w`.
    pub fn shift_difference(&self, w: Complex64) -> Self {
        self.map_coeffs(|_, a, l| {
            let m = math::cexp(-w * l);
            a * (m - Complex64::new(1.0, 0.0))
        })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map_coeffs(|_, a, _| a * c)
    }

    /// `Σ |a_n|`.
    pub fn abs_sum(&self) -> f64 {
        math::sum_compensated(self.coeffs.iter().map(|&a| math::abs(a)))
    }

    /// `Σ |a_n| n^{-σ}`, the trivial bound for `|f|` on `Re s ≥ σ`.
    pub fn abs_sum_at(&self, sigma: f64) -> f64 {
        math::sum_compensated(
            self.coeffs
                .iter()
                .zip(self.log_n.iter())
                .map(|(&a, &l)| math::abs(a) * math::exp(-sigma * l)),
        )
    }

    /// `Σ |a_n|²`.
    pub fn l2_squared(&self) -> f64 {
        math::sum_compensated(self.coeffs.iter().map(|a| a.norm_sqr()))
    }

    /// `Σ |a_n| ln n`, the Lipschitz constant of `σ ↦ f(σ + it)`.
    pub fn log_weighted_abs_sum(&self) -> f64 {
        math::sum_compensated(
            self.coeffs
                .iter()
                .zip(self.log_n.iter())
                .map(|(&a, &l)| math::abs(a) * l),
        )
    }

    /// Largest `n` with `a_n ≠ 0`, or 1 for the zero polynomial.
    pub fn support_max(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|a| a.re != 0.0 || a.im != 0.0)
            .map_or(1, |i| i + 1)
    }

    fn zip_with<F>(&self, other: &Self, op: F) -> Self
    where
        F: Fn(Complex64, Complex64) -> Complex64,
    {
        let len = self.degree().max(other.degree());
        let coeffs = (1..=len).map(|n| op(self.coeff(n), other.coeff(n))).collect();
        let log_n = if self.degree() == len {
            Arc::clone(&self.log_n)
        } else {
            Arc::clone(&other.log_n)
        };
        Self { coeffs, log_n }
    }
}

impl Add for &DirichletPolynomial {
    type Output = DirichletPolynomial;

    fn add(self, rhs: Self) -> DirichletPolynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DirichletPolynomial {
    type Output = DirichletPolynomial;

    fn sub(self, rhs: Self) -> DirichletPolynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<Complex64> for &DirichletPolynomial {
    type Output = DirichletPolynomial;

    fn mul(self, c: Complex64) -> DirichletPolynomial {
        self.scale(c)
    }
}
