//! Riesz means of the first kind,
//! `R_N^k f(s) = Σ_{n<N} a_n (1 - ln n/ln N)^k n^{-s}`,
//! and their contour representation
//! `R_N^k f(s) = Γ(k+1) ∫ f(s + z/ln N) e^z / z^{k+1} dy/2π`, `z = x + iy`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::math::{self, CompensatedComplex};
use crate::quad;
use crate::series::DirichletPolynomial;
use crate::{Error, Result};

/// Default truncation `|y| ≤ y_cutoff` of the contour integral.
pub const DEFAULT_Y_CUTOFF: f64 = 200.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszParams {
    pub n: u64,
    pub k: f64,
    pub contour_x: f64,
    pub y_cutoff: f64,
}

impl RieszParams {
    /// Order `k` at length `N`, with `x = k` and the default cutoff.
    pub fn new(n: u64, k: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::param("N", n as f64, "must be >= 2"));
        }
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::param("k", k, "must be finite and > 0"));
        }
        Ok(Self {
            n,
            k,
            contour_x: k,
            y_cutoff: DEFAULT_Y_CUTOFF,
        })
    }

    pub fn with_contour_x(mut self, x: f64) -> Result<Self> {
        if !(x.is_finite() && x > 0.0) {
            return Err(Error::param("contour_x", x, "must be finite and > 0"));
        }
        self.contour_x = x;
        Ok(self)
    }

    pub fn with_cutoff(mut self, y: f64) -> Result<Self> {
        if !(y.is_finite() && y > 0.0) {
            return Err(Error::param("y_cutoff", y, "must be finite and > 0"));
        }
        self.y_cutoff = y;
        Ok(self)
    }

    pub fn log_n(&self) -> f64 {
        math::ln(self.n as f64)
    }

    /// `(1 - ln n/ln N)^k` for `n < N`, else 0.
    pub fn weight(&self, n: u64) -> f64 {
        if n == 0 || n >= self.n {
            return 0.0;
        }
        let base = 1.0 - math::ln(n as f64) / self.log_n();
        math::powf(base, self.k)
    }
}

/// `R_N^k f(s)`, summed in ascending `n`.
pub fn riesz_mean(f: &DirichletPolynomial, params: &RieszParams, s: Complex64) -> Complex64 {
    let top = (f.degree() as u64).min(params.n - 1) as usize;
    let mut acc = CompensatedComplex::new();
    for (i, (&a, &l)) in f.coeffs()[..top].iter().zip(f.log_table()).enumerate() {
        if a.re == 0.0 && a.im == 0.0 {
            continue;
        }
        let w = params.weight(i as u64 + 1);
        acc.add(a * w * math::cexp(-s * l));
    }
    acc.value()
}

/// A contour quadrature with its error budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourValue {
    pub value: Complex64,
    /// Bound on the part of the integral with `|y| > y_cutoff`.
    pub tail_bound: f64,
    /// Adaptive Simpson error estimate plus a rounding allowance.
    pub quadrature_error: f64,
}

impl ContourValue {
    pub fn bound(&self) -> f64 {
        self.tail_bound + self.quadrature_error
    }
}

const REL_TOL: f64 = 1e-12;

/// `Γ(k+1)/(2π) ∫_{-Y}^{Y} g(y) dy` with `±y` paired, plus the rounding allowance
/// relative to `scale = sup|g|·|z|^{k+1}`.
fn hankel_integral<G>(g: &G, k: f64, x: f64, cutoff: f64, freq: f64, scale: f64) -> (Complex64, f64)
where
    G: Fn(f64) -> Complex64 + Sync,
{
    let paired = |y: f64| g(y) + g(-y);
    // ∫_R |x+iy|^{-(k+1)} dy
    let kernel_mass = math::powf(x, -k) * math::sqrt(PI) * math::gamma(0.5 * k) / math::gamma(0.5 * (k + 1.0));
    let prefactor = math::gamma(k + 1.0) / (2.0 * PI);
    let mass = prefactor * scale * kernel_mass;
    let panels = libm::ceil(cutoff * freq.max(1.0) / 2.0).max(1.0) as usize;
    let r = quad::adaptive_simpson_panels(&paired, 0.0, cutoff, panels, REL_TOL * mass.max(1e-300) / prefactor);
    let rounding = 1e3 * f64::EPSILON * mass;
    (r.value * prefactor, r.error * prefactor + rounding)
}

fn contour_checks(params: &RieszParams, s: Complex64) -> Result<()> {
    if !(params.k > 1.0) {
        return Err(Error::param("k", params.k, "contour form needs k > 1"));
    }
    if !(s.re > 0.0 && s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::param("sigma", s.re, "must be finite and > 0"));
    }
    if !(params.contour_x > 0.0) {
        return Err(Error::param("contour_x", params.contour_x, "must be > 0"));
    }
    Ok(())
}

fn contour_core(f: &DirichletPolynomial, params: &RieszParams, s: Complex64, sup: f64) -> (Complex64, f64, f64) {
    let (k, x, cutoff) = (params.k, params.contour_x, params.y_cutoff);
    let l = params.log_n();
    let g = |y: f64| {
        let z = Complex64::new(x, y);
        f.eval(s + z / l) * math::cexp(z) / math::cpowf(z, k + 1.0)
    };
    let freq = 1.0 + math::ln(f.degree().max(2) as f64) / l;
    let scale = sup * math::exp(x);
    let (value, err) = hankel_integral(&g, k, x, cutoff, freq, scale);
    let prefactor = math::gamma(k + 1.0) / (2.0 * PI);
    // ∫_{|y|>Y} |y|^{-(k+1)} dy = 2 Y^{-k} / k
    let tail = prefactor * scale * 2.0 * math::powf(cutoff, -k) / k;
    (value, tail, err)
}

/// The contour form of `R_N^k f(s)` over `|y| ≤ y_cutoff`.
///
/// The tail bound uses `|f(w)| ≤ Σ|a_n| n^{-Re w}` on the contour, which holds
/// for every polynomial.
pub fn riesz_contour(f: &DirichletPolynomial, params: &RieszParams, s: Complex64) -> Result<ContourValue> {
    contour_checks(params, s)?;
    let sup = f.abs_sum_at(s.re + params.contour_x / params.log_n());
    let (value, tail_bound, quadrature_error) = contour_core(f, params, s, sup);
    Ok(ContourValue {
        value,
        tail_bound,
        quadrature_error,
    })
}

/// Like [`riesz_contour`], with the tail also bounded through the pointwise
/// estimate `|f(w)|^p ≤ 2C(1+|w|)/Re w`; the smaller of the two tails is reported.
pub fn riesz_contour_with_growth(
    f: &DirichletPolynomial,
    params: &RieszParams,
    s: Complex64,
    c: f64,
    p: f64,
) -> Result<ContourValue> {
    let mut out = riesz_contour(f, params, s)?;
    if !(p >= 1.0 && c.is_finite() && c >= 0.0) {
        return Err(Error::param("C", c, "needs finite C >= 0 and p >= 1"));
    }
    let (k, x, y) = (params.k, params.contour_x, params.y_cutoff);
    let l = params.log_n();
    let re = s.re + x / l;
    let a = 1.0 + math::abs(s) + x / l;
    let b = 1.0 / l;
    let q = 1.0 / p;
    // (a + b|y|)^{1/p} ≤ |y|^{1/p} (a/Y + b)^{1/p} for |y| ≥ Y
    let integral = 2.0 * math::powf(a / y + b, q) * math::powf(y, q - k) / (k - q);
    let growth_tail = math::gamma(k + 1.0) / (2.0 * PI) * math::exp(x) * math::powf(2.0 * c / re, q) * integral;
    out.tail_bound = out.tail_bound.min(growth_tail);
    Ok(out)
}

/// Numerical Hankel integral against its target `u^k` (`u ≥ 0`) or `0` (`u < 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HankelResidual {
    pub value: Complex64,
    pub target: f64,
    pub residual: f64,
    pub tail_bound: f64,
}

/// `|Γ(k+1) ∫_{|y|≤Y} e^{u z}/z^{k+1} dy/2π - target|`, `z = x + iy`.
pub fn hankel_check(u: f64, k: f64, x: f64, y_cutoff: f64) -> Result<HankelResidual> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::param("x", x, "must be finite and > 0"));
    }
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::param("k", k, "must be finite and > 0"));
    }
    if !(y_cutoff.is_finite() && y_cutoff > 0.0) {
        return Err(Error::param("y_cutoff", y_cutoff, "must be finite and > 0"));
    }
    if !u.is_finite() {
        return Err(Error::param("u", u, "must be finite"));
    }
    let g = |y: f64| {
        let z = Complex64::new(x, y);
        math::cexp(z * u) / math::cpowf(z, k + 1.0)
    };
    let scale = math::exp(u * x);
    let (value, _) = hankel_integral(&g, k, x, y_cutoff, u.abs(), scale);
    let target = if u > 0.0 { math::powf(u, k) } else { 0.0 };
    let tail_bound = math::gamma(k + 1.0) / (2.0 * PI) * scale * 2.0 * math::powf(y_cutoff, -k) / k;
    Ok(HankelResidual {
        value,
        target,
        residual: math::abs(value - target),
        tail_bound,
    })
}

/// One row of a convergence study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergencePoint {
    pub n: u64,
    pub k: f64,
    pub s: Complex64,
    pub abs_error: f64,
    /// `Σ |a_n| (1 - w_n) n^{-σ}`, an upper bound for `abs_error`.
    pub bound: f64,
}

/// `|R_N^k f(s) - f(s)|` along an increasing list of `N`.
pub fn convergence_study(
    f: &DirichletPolynomial,
    k: f64,
    s: Complex64,
    n_list: &[u64],
) -> Result<Vec<ConvergencePoint>> {
    if !(k > 1.0 && k.is_finite()) {
        return Err(Error::param("k", k, "must be finite and > 1"));
    }
    if !(s.re > 0.0 && s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::param("sigma", s.re, "must be finite and > 0"));
    }
    for w in n_list.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::param("N_list", w[1] as f64, "must be strictly increasing"));
        }
    }
    let exact = f.eval(s);
    let mut out = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let params = RieszParams::new(n, k)?;
        let abs_error = math::abs(riesz_mean(f, &params, s) - exact);
        let bound = math::sum_compensated(
            f.coeffs()
                .iter()
                .zip(f.log_table())
                .enumerate()
                .map(|(i, (a, &l))| math::abs(*a) * (1.0 - params.weight(i as u64 + 1)) * math::exp(-s.re * l)),
        );
        out.push(ConvergencePoint {
            n,
            k,
            s,
            abs_error,
            bound,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn weights_at_ends() {
        let p = RieszParams::new(10, 2.5).unwrap();
        assert_eq!(p.weight(1), 1.0);
        assert_eq!(p.weight(10), 0.0);
        assert_eq!(p.weight(11), 0.0);
        assert!(RieszParams::new(1, 2.0).is_err());
        assert!(RieszParams::new(5, 0.0).is_err());
    }

    #[test]
    fn zeta_example() {
        let f = DirichletPolynomial::zeta_truncation(4).unwrap();
        let p = RieszParams::new(4, 1.0).unwrap();
        let v = riesz_mean(&f, &p, c(0.0));
        let expected = 1.0 + (1.0 - 2f64.ln() / 4f64.ln()) + (1.0 - 3f64.ln() / 4f64.ln());
        assert!((v.re - expected).abs() < 1e-15);
        assert!((v.re - 1.70752).abs() < 1e-5);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn hankel_targets() {
        let r = hankel_check(1.0, 3.0, 3.0, 200.0).unwrap();
        assert!(r.residual <= 1e-4, "{r:?}");
        for u in [-2.0, -1.0, -0.1, 0.0, 0.5, 1.0, 2.0] {
            let r = hankel_check(u, 3.0, 3.0, 200.0).unwrap();
            assert!(r.residual <= 1e-3, "u = {u}: {r:?}");
            assert!(r.residual <= r.tail_bound + 1e-9, "u = {u}: {r:?}");
        }
        assert!(hankel_check(1.0, 3.0, 0.0, 200.0).is_err());
    }

    #[test]
    fn contour_constant() {
        let one = DirichletPolynomial::constant(c(1.0));
        let p = RieszParams::new(10, 2.0).unwrap();
        let r = riesz_contour(&one, &p, Complex64::new(0.5, 1.0)).unwrap();
        assert!((r.value - c(1.0)).norm() <= r.bound(), "{r:?}");
        let p1 = RieszParams::new(10, 1.0).unwrap();
        assert!(riesz_contour(&one, &p1, c(0.5)).is_err());
        assert!(riesz_contour(&one, &p, c(0.0)).is_err());
    }

    #[test]
    fn contour_matches_sum() {
        let f = DirichletPolynomial::zeta_truncation(30).unwrap();
        for (n, k) in [(10, 2.0), (100, 3.5)] {
            let p = RieszParams::new(n, k).unwrap();
            let s = Complex64::new(0.4, -2.0);
            let r = riesz_contour(&f, &p, s).unwrap();
            let direct = riesz_mean(&f, &p, s);
            assert!((r.value - direct).norm() <= r.bound(), "N={n}: {r:?} vs {direct}");
        }
    }

    #[test]
    fn study_constant_is_exact() {
        let one = DirichletPolynomial::constant(c(1.0));
        let rows = convergence_study(&one, 3.0, c(0.5), &[10, 100, 1000]).unwrap();
        assert!(rows.iter().all(|r| r.abs_error == 0.0));
        assert!(convergence_study(&one, 3.0, c(0.5), &[100, 10]).is_err());
    }
}
