//! The half-plane Poisson extension of the boundary function along the flow,
//!
//! `f_χ(σ+it) = (1/π) ∫ f*(χ p^{-iτ}) σ/(σ² + (t-τ)²) dτ`,
//!
//! together with Fatou traces and the growth bounds
//! `|f_χ(s)|^p ≤ √2·C(1+|s|)/σ` and `sup_{σ,T} (1/2T)∫|f_χ|^p ≤ 6C`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::character::{Character, Torus};
use crate::check::CheckStatus;
use crate::math::{self, CompensatedComplex, FRAC_1_PI};
use crate::means::{self, FlowGrowthCertificate, WindowMean};
use crate::reduce;
use crate::series::{DirichletPolynomial, HalfPlanePoint};
use crate::{Error, Result};

/// How the truncation tail is bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailBoundMode {
    /// Integration by parts against `∫_0^T |f*|^p ≤ C(1+|T|)`, with `C × safety`.
    #[default]
    FromCertificate,
}

/// Trapezoid window `|τ - t| ≤ trunc_t` with node spacing at most `step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonQuadratureSpec {
    pub trunc_t: f64,
    pub step: f64,
    pub tail_bound_mode: TailBoundMode,
}

impl PoissonQuadratureSpec {
    pub fn new(trunc_t: f64, step: f64) -> Result<Self> {
        if !(trunc_t.is_finite() && trunc_t > 0.0) {
            return Err(Error::param("trunc_T", trunc_t, "must be finite and > 0"));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::param("step", step, "must be finite and > 0"));
        }
        Ok(Self {
            trunc_t,
            step,
            tail_bound_mode: TailBoundMode::FromCertificate,
        })
    }

    /// Requires `step ≤ σ/10` and `trunc_T ≥ 10σ`.
    pub fn validate(&self, sigma: f64) -> Result<()> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::param("sigma", sigma, "must be finite and > 0"));
        }
        if self.step > sigma / 10.0 {
            return Err(Error::StepTooCoarse {
                step: self.step,
                max: sigma / 10.0,
            });
        }
        if self.trunc_t < 10.0 * sigma {
            return Err(Error::param("trunc_T", self.trunc_t, "must be >= 10 sigma"));
        }
        Ok(())
    }

    /// Node count and actual spacing covering `[t - W, t + W]`.
    pub fn nodes(&self) -> (usize, f64) {
        let n = libm::ceil(2.0 * self.trunc_t / self.step).max(2.0) as usize;
        (n, 2.0 * self.trunc_t / n as f64)
    }

    /// Smallest window (to within 1%) whose certificate tail at `σ + it` is at
    /// most `target`, with `step = σ/10`.
    pub fn for_target(sigma: f64, t: f64, cert: &FlowGrowthCertificate, target: f64) -> Result<Self> {
        if !(target > 0.0 && target.is_finite()) {
            return Err(Error::param("target", target, "must be finite and > 0"));
        }
        let step = sigma / 10.0;
        let tail = |w: f64| {
            let spec = Self::new(w, step).expect("positive");
            tail_bound(sigma, t, cert, &spec)
        };
        let mut hi = 10.0 * sigma;
        while tail(hi) > target {
            hi *= 2.0;
            if hi > 1e9 {
                return Err(Error::param("target", target, "needs an unbounded window"));
            }
        }
        let mut lo = (hi / 2.0).max(10.0 * sigma);
        while hi - lo > 0.01 * lo {
            let mid = 0.5 * (lo + hi);
            if tail(mid) > target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let spec = Self::new(hi, step)?;
        spec.validate(sigma)?;
        Ok(spec)
    }
}

/// `P_σ(u) = σ/(π(σ² + u²))`.
#[inline]
pub fn kernel(sigma: f64, u: f64) -> f64 {
    sigma * FRAC_1_PI / (sigma * sigma + u * u)
}

#[inline]
fn kernel_d1(sigma: f64, u: f64) -> f64 {
    let q = sigma * sigma + u * u;
    -2.0 * sigma * u * FRAC_1_PI / (q * q)
}

/// Kernel mass outside `|u| ≤ W`: `2 atan(σ/W)/π`.
pub fn kernel_mass_outside(sigma: f64, w: f64) -> f64 {
    2.0 * math::atan(sigma / w) * FRAC_1_PI
}

/// Endpoint-corrected trapezoid of the bare kernel over the window, plus
/// the analytic outside mass. Equals 1 up to quadrature error.
pub fn kernel_normalization(sigma: f64, spec: &PoissonQuadratureSpec) -> f64 {
    let (n, h) = spec.nodes();
    let w = spec.trunc_t;
    let inside = reduce::chunked(
        n + 1,
        0.0,
        |range| {
            let mut acc = math::Compensated::new();
            for i in range {
                let u = -w + i as f64 * h;
                let wt = if i == 0 || i == n { 0.5 } else { 1.0 };
                acc.add(wt * kernel(sigma, u));
            }
            acc.value()
        },
        |a, b| a + b,
    ) * h
        - h * h / 12.0 * (kernel_d1(sigma, w) - kernel_d1(sigma, -w));
    inside + kernel_mass_outside(sigma, w)
}

/// Certificate tail for the window of `spec` at `σ + it`:
/// `m_out^{1-1/p} · I_out^{1/p}` with `m_out` the outside kernel mass and
/// `I_out ≤ 4C'[(1+|t|+W)σ/(π(σ²+W²)) + atan(σ/W)/π]`, `C' = C × safety`,
/// evaluated at `W - h` to cover the half-weighted end nodes.
pub fn tail_bound(sigma: f64, t: f64, cert: &FlowGrowthCertificate, spec: &PoissonQuadratureSpec) -> f64 {
    let (_, h) = spec.nodes();
    let w = (spec.trunc_t - h).max(h);
    let c = cert.c_safe();
    let p = cert.p;
    let m_out = kernel_mass_outside(sigma, w);
    let i_out = 4.0
        * c
        * ((1.0 + t.abs() + w) * sigma * FRAC_1_PI / (sigma * sigma + w * w) + math::atan(sigma / w) * FRAC_1_PI);
    math::powf(m_out, 1.0 - 1.0 / p) * math::powf(i_out, 1.0 / p)
}

/// A Poisson quadrature with its error budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonValue {
    pub value: Complex64,
    pub tail_bound: f64,
    /// Trapezoid aliasing plus the next Euler–Maclaurin endpoint term.
    pub discretization_bound: f64,
    pub kernel_mass_outside: f64,
}

impl PoissonValue {
    pub fn bound(&self) -> f64 {
        self.tail_bound + self.discretization_bound
    }
}

/// `(1/π)∫_{|τ-t|≤W} f*(χ p^{-iτ}) σ/(σ²+(t-τ)²) dτ` by trapezoid with an
/// Euler–Maclaurin endpoint correction.
pub fn poisson_extend(
    torus: &Torus,
    f: &DirichletPolynomial,
    chi: &Character,
    s: HalfPlanePoint,
    cert: &FlowGrowthCertificate,
    spec: &PoissonQuadratureSpec,
) -> Result<PoissonValue> {
    s.require_interior()?;
    let (sigma, t) = (s.sigma, s.t);
    spec.validate(sigma)?;
    let lifted = torus.lift(f)?;
    lifted.boundary_eval(chi)?;
    // d/dτ f*(χ p^{-iτ}) = Σ (-i ln n) a_n χ(n) n^{-iτ}
    let deriv = torus.lift(&f.map_coeffs(|_, a, l| a * Complex64::new(0.0, -l)))?;

    let (n, h) = spec.nodes();
    let w = spec.trunc_t;
    let a = t - w;
    let sum = reduce::chunked(
        n + 1,
        Complex64::new(0.0, 0.0),
        |range| {
            let mut acc = CompensatedComplex::new();
            for i in range {
                let tau = a + i as f64 * h;
                let wt = if i == 0 || i == n { 0.5 } else { 1.0 };
                let v = torus.flow_eval(&lifted, chi, tau).expect("length checked");
                acc.add(v * (wt * kernel(sigma, t - tau)));
            }
            acc.value()
        },
        |x, y| x + y,
    );
    // g(τ) = F(τ) P(t-τ), g' = F' P(t-τ) - F P'(t-τ)
    let g_d1 = |tau: f64| -> Result<Complex64> {
        let u = t - tau;
        let fv = torus.flow_eval(&lifted, chi, tau)?;
        let fd = torus.flow_eval(&deriv, chi, tau)?;
        Ok(fd * kernel(sigma, u) - fv * kernel_d1(sigma, u))
    };
    let correction = (g_d1(t + w)? - g_d1(a)?) * (h * h / 12.0);
    let value = sum * h - correction;

    let amp = f.abs_sum();
    let log_n = math::ln(f.support_max().max(1) as f64);
    // aliasing: strip |Im τ| < σ/2, sup |F| ≤ A N^{σ/2}, ∫|P(x ± iσ/2)| dx ≤ 2/√3
    let m = amp * math::exp(0.5 * sigma * log_n) * 2.0 / math::sqrt(3.0);
    let aliasing = 2.0 * m / libm::expm1(PI * sigma / h);
    // h⁴/720 · |g'''| at both ends; |F^{(j)}| ≤ Σ|a_n|(ln n)^j, |P^{(m)}(W)| ≤ 2(m+1)!σ/(πW^{m+2})
    let pm = |order: u32| {
        let fact = [1.0, 2.0, 6.0, 24.0][order as usize];
        2.0 * fact * sigma * FRAC_1_PI / math::powf(w, f64::from(order) + 2.0)
    };
    let fj = |j: i32| amp * libm::pow(log_n, f64::from(j));
    let g3 = fj(3) * pm(0) + 3.0 * fj(2) * pm(1) + 3.0 * fj(1) * pm(2) + fj(0) * pm(3);
    let h4 = h * h * h * h;
    let endpoint = 2.0 * h4 / 720.0 * g3;
    let rounding = 1e3 * f64::EPSILON * amp;

    Ok(PoissonValue {
        value,
        tail_bound: tail_bound(sigma, t, cert, spec),
        discretization_bound: aliasing + endpoint + rounding,
        kernel_mass_outside: kernel_mass_outside(sigma, w),
    })
}

/// Values `f_χ(σ_i + it)` approaching the boundary, and the boundary target.
#[derive(Debug, Clone, PartialEq)]
pub struct FatouTrace {
    pub sigmas: Vec<f64>,
    pub values: Vec<Complex64>,
    pub target: Complex64,
    pub gaps: Vec<f64>,
}

impl FatouTrace {
    /// Whether the gaps are non-increasing along the list.
    pub fn is_monotone(&self) -> bool {
        self.gaps.windows(2).all(|w| w[1] <= w[0])
    }
}

/// `f_χ(σ + it)` by direct evaluation for each `σ` in a decreasing positive
/// list, paired with `f*(χ p^{-it})`.
pub fn fatou_trace(
    torus: &Torus,
    f: &DirichletPolynomial,
    chi: &Character,
    t: f64,
    sigma_list: &[f64],
) -> Result<FatouTrace> {
    if sigma_list.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
        return Err(Error::param("sigma_list", f64::NAN, "entries must be finite and > 0"));
    }
    if sigma_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::param("sigma_list", f64::NAN, "must be strictly decreasing"));
    }
    let g = torus.vertical_limit(f, chi)?;
    let target = torus.boundary_eval(f, &torus.kronecker_twist(chi, t)?)?;
    let values: Vec<Complex64> = sigma_list.iter().map(|&s| g.eval(Complex64::new(s, t))).collect();
    let gaps = values.iter().map(|&v| math::abs(v - target)).collect();
    Ok(FatouTrace {
        sigmas: sigma_list.to_vec(),
        values,
        target,
        gaps,
    })
}

/// One audited bound check at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointCheck {
    pub point: HalfPlanePoint,
    pub measured: f64,
    pub bound: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
}

impl PointCheck {
    pub fn margin(&self) -> f64 {
        self.bound - self.measured
    }
}

/// `|f_χ(s)|^p` against `√2·C(1+|s|)/σ` at each point. Values above the raw
/// bound but within the certificate safety band are `Inconclusive`.
pub fn check_pointwise_bound(
    torus: &Torus,
    f: &DirichletPolynomial,
    chi: &Character,
    cert: &FlowGrowthCertificate,
    points: &[HalfPlanePoint],
) -> Result<Vec<PointCheck>> {
    let g = torus.vertical_limit(f, chi)?;
    points
        .iter()
        .map(|&s| {
            s.require_interior()?;
            let measured = math::abs_pow(g.eval_at(s), cert.p);
            let bound = math::sqrt(2.0) * cert.c * (1.0 + s.modulus()) / s.sigma;
            let tolerance = (cert.safety - 1.0).max(0.0) * bound;
            Ok(PointCheck {
                point: s,
                measured,
                bound,
                tolerance,
                status: CheckStatus::classify(measured, bound, tolerance),
            })
        })
        .collect()
}

/// Grid of finite-window means against `6C`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupSupReport {
    pub cells: Vec<WindowMean>,
    pub sup: f64,
    /// `sup / C`, to compare with the constant 6.
    pub ratio: f64,
    pub bound: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
}

/// `sup_{σ,T} (1/2T)∫_{-T}^{T}|f_χ(σ+it)|^p dt` over the grid, against `6C`;
/// the band up to `6C × safety` plus the largest quadrature error is `Inconclusive`.
pub fn check_supsup_bound(
    torus: &Torus,
    f: &DirichletPolynomial,
    chi: &Character,
    cert: &FlowGrowthCertificate,
    sigma_grid: &[f64],
    t_grid: &[f64],
) -> Result<SupSupReport> {
    if let Some(&bad) = t_grid.iter().find(|&&t| !(t >= 1.0 && t.is_finite())) {
        return Err(Error::param("T_grid", bad, "entries must be finite and >= 1"));
    }
    let g = torus.vertical_limit(f, chi)?;
    let cells = means::window_means(&g, cert.p, sigma_grid, t_grid)?;
    let sup = cells.iter().map(|c| c.mean).fold(0.0, f64::max);
    let max_err = cells.iter().map(|c| c.error).fold(0.0, f64::max);
    let bound = 6.0 * cert.c;
    let tolerance = (cert.safety - 1.0).max(0.0) * bound + max_err;
    Ok(SupSupReport {
        ratio: if cert.c > 0.0 { sup / cert.c } else { f64::INFINITY },
        status: CheckStatus::classify(sup, bound, tolerance),
        cells,
        sup,
        bound,
        tolerance,
    })
}

/// `max_{M₀ ≤ M ≤ N} |S_M - S_{M₀}|` for the partial sums `S_M = Σ_{n≤M} a_n χ(n) n^{-s}`,
/// one value per entry of `m0_list`. A diagnostic of Cauchy behaviour.
pub fn partial_sum_gaps(
    torus: &Torus,
    f: &DirichletPolynomial,
    chi: &Character,
    s: Complex64,
    m0_list: &[usize],
) -> Result<Vec<f64>> {
    let g = torus.vertical_limit(f, chi)?;
    let mut partial = Vec::with_capacity(g.degree() + 1);
    let mut acc = CompensatedComplex::new();
    partial.push(Complex64::new(0.0, 0.0));
    for (&a, &l) in g.coeffs().iter().zip(g.log_table()) {
        acc.add(a * math::cexp(-s * l));
        partial.push(acc.value());
    }
    m0_list
        .iter()
        .map(|&m0| {
            if m0 == 0 || m0 > g.degree() {
                return Err(Error::param("M0", m0 as f64, "must lie in 1..=N"));
            }
            let base = partial[m0];
            Ok(partial[m0..].iter().map(|&v| math::abs(v - base)).fold(0.0, f64::max))
        })
        .collect()
}

/// `√2·C(1+|s|)/σ`.
pub fn pointwise_bound(c: f64, s: HalfPlanePoint) -> f64 {
    math::sqrt(2.0) * c * (1.0 + s.modulus()) / s.sigma
}
