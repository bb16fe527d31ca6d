//! p-means `M_p^p(σ,f) = lim (1/2T)∫_{-T}^{T}|f(σ+it)|^p dt` and the flow
//! growth constant `C_f(χ)`.
//!
//! Three independent routes are provided:
//!
//! * closed forms for `p = 2` ([`exact_mean_2`], and [`exact_finite_mean_2`]
//!   for a finite horizon),
//! * composite Simpson quadrature of the time average ([`time_mean`]),
//! * Monte Carlo over Haar measure on the torus ([`mc_torus_mean`]), using
//!   `‖f‖_p^p = ∫ |f*(χ)|^p dm(χ)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::character::{Character, Provenance, Torus};
use crate::math::{self, Compensated};
use crate::quad;
use crate::reduce;
use crate::rng;
use crate::series::DirichletPolynomial;
use crate::{Error, Result};

/// How a [`MeanEstimate`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeanMethod {
    Exact2,
    TimeAverage,
    MonteCarlo,
}

impl MeanMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            MeanMethod::Exact2 => "exact2",
            MeanMethod::TimeAverage => "time-average",
            MeanMethod::MonteCarlo => "monte-carlo",
        }
    }
}

/// Whether `value` holds `M_p^p` or its p-th root `M_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanMode {
    Power,
    Root,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanEstimate {
    pub value: f64,
    pub p: f64,
    pub sigma: f64,
    pub method: MeanMethod,
    /// Horizon `T` (time average; `∞` for closed forms) or sample count.
    pub extent: f64,
    /// Quadrature error bound, Monte Carlo standard error, or 0 for closed forms.
    pub stderr: f64,
    pub mode: MeanMode,
}

impl MeanEstimate {
    /// The same estimate as `M_p`, with the error propagated to first order.
    pub fn root(&self) -> Self {
        if self.mode == MeanMode::Root {
            return *self;
        }
        let inv = 1.0 / self.p;
        let value = math::powf(self.value, inv);
        let stderr = if self.value > 0.0 {
            inv * value / self.value * self.stderr
        } else {
            math::powf(self.stderr, inv)
        };
        Self {
            value,
            stderr,
            mode: MeanMode::Root,
            ..*self
        }
    }

    /// The same estimate as `M_p^p`.
    pub fn power(&self) -> Self {
        if self.mode == MeanMode::Power {
            return *self;
        }
        let value = math::powf(self.value, self.p);
        let stderr = if self.value > 0.0 {
            self.p * value / self.value * self.stderr
        } else {
            math::powf(self.stderr, self.p)
        };
        Self {
            value,
            stderr,
            mode: MeanMode::Power,
            ..*self
        }
    }

    /// `(log M_p, stderr of log M_p)`.
    pub fn log_root(&self) -> (f64, f64) {
        let r = self.root();
        let se = if r.value > 0.0 {
            r.stderr / r.value
        } else {
            f64::INFINITY
        };
        (math::ln(r.value), se)
    }
}

fn check_p(p: f64) -> Result<()> {
    if p.is_finite() && p >= 1.0 {
        Ok(())
    } else {
        Err(Error::param("p", p, "must be finite and >= 1"))
    }
}

fn check_sigma(sigma: f64) -> Result<()> {
    if sigma.is_finite() && sigma >= 0.0 {
        Ok(())
    } else {
        Err(Error::param("sigma", sigma, "must be finite and >= 0"))
    }
}

fn check_horizon(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::param("T", t, "must be finite and > 0"))
    }
}

/// `M_2^2(σ,f) = Σ |a_n|² n^{-2σ}`.
pub fn exact_mean_2(f: &DirichletPolynomial, sigma: f64) -> MeanEstimate {
    let value = math::sum_compensated(
        f.coeffs()
            .iter()
            .zip(f.log_table())
            .map(|(a, &l)| a.norm_sqr() * math::exp(-2.0 * sigma * l)),
    );
    MeanEstimate {
        value,
        p: 2.0,
        sigma,
        method: MeanMethod::Exact2,
        extent: f64::INFINITY,
        stderr: 0.0,
        mode: MeanMode::Power,
    }
}

/// Non-zero terms `(ln n, a_n n^{-σ})`.
fn damped_terms(f: &DirichletPolynomial, sigma: f64) -> Vec<(f64, Complex64)> {
    f.coeffs()
        .iter()
        .zip(f.log_table())
        .filter(|(a, _)| a.re != 0.0 || a.im != 0.0)
        .map(|(&a, &l)| (l, a * math::exp(-sigma * l)))
        .collect()
}

/// Exact `(1/2T)∫_{-T}^{T}|f(σ+it)|² dt
///   = Σ_m Σ_n a_m ā_n (mn)^{-σ} sinc(T ln(m/n))`.
pub fn exact_finite_mean_2(f: &DirichletPolynomial, sigma: f64, horizon: f64) -> Result<f64> {
    check_horizon(horizon)?;
    if !sigma.is_finite() {
        return Err(Error::param("sigma", sigma, "must be finite"));
    }
    let terms = damped_terms(f, sigma);
    let total = reduce::chunked(
        terms.len(),
        0.0,
        |range| {
            let mut acc = Compensated::new();
            for i in range {
                let (li, bi) = terms[i];
                acc.add(bi.norm_sqr());
                for &(lj, bj) in &terms[..i] {
                    let c = (bi * bj.conj()).re;
                    acc.add(2.0 * c * math::sinc(horizon * (li - lj)));
                }
            }
            acc.value()
        },
        |a, b| a + b,
    );
    Ok(total)
}

/// `Σ_{m≠n} |a_m a_n| (mn)^{-σ} / (T |ln(m/n)|)`, which bounds
/// `|exact_finite_mean_2(f, σ, T) - exact_mean_2(f, σ)|`.
pub fn finite_horizon_gap_bound(f: &DirichletPolynomial, sigma: f64, horizon: f64) -> Result<f64> {
    check_horizon(horizon)?;
    let terms = damped_terms(f, sigma);
    let mut acc = Compensated::new();
    for (i, &(li, bi)) in terms.iter().enumerate() {
        for &(lj, bj) in &terms[..i] {
            acc.add(2.0 * math::abs(bi) * math::abs(bj) / (horizon * (li - lj).abs()));
        }
    }
    Ok(acc.value())
}

/// Minimum Simpson step count on `[-T, T]`: `20·T·ln(N)/π`, even, at least 2.
pub fn min_time_steps(degree: usize, horizon: f64) -> usize {
    let ln_n = math::ln(degree.max(1) as f64);
    let req = libm::ceil(20.0 * horizon * ln_n / PI);
    let req = if req.is_finite() && req > 2.0 { req as usize } else { 2 };
    req.next_multiple_of(2)
}

/// Step count used when a caller does not choose one: five times the minimum.
pub fn default_time_steps(degree: usize, horizon: f64) -> usize {
    5 * min_time_steps(degree, horizon)
}

/// Composite Simpson estimate of `(1/2T)∫_{-T}^{T}|g(σ+it)|^p dt`.
///
/// For even integer `p = 2k` the reported `stderr` is the rigorous Simpson
/// bound `h⁴·max|∂⁴|g|^p|/180 ≤ h⁴·A^p·(k ln N)⁴/180` with `A = Σ|a_n|n^{-σ}`;
/// for other `p` it is the Richardson estimate `|S_h - S_{2h}|/15`.
pub fn time_mean(g: &DirichletPolynomial, sigma: f64, p: f64, horizon: f64, steps: usize) -> Result<MeanEstimate> {
    check_p(p)?;
    check_sigma(sigma)?;
    check_horizon(horizon)?;
    let required = min_time_steps(g.degree(), horizon);
    if steps < required {
        return Err(Error::UnderResolved { got: steps, required });
    }
    let n = steps.next_multiple_of(2);
    // g(σ+it) = Σ (a_n n^{-σ}) n^{-it}, with n^{-it} built from p^{-it}
    let support = u32::try_from(g.support_max()).map_err(|_| Error::param("N", g.support_max() as f64, "too large"))?;
    let torus = Torus::new(support)?;
    let lifted = torus.lift(&g.translate_h(sigma)?)?;
    let integrand = |t: f64| math::abs_pow(torus.line_eval(&lifted, t).expect("torus covers support"), p);
    let width = 2.0 * horizon;
    let value = quad::simpson(-horizon, horizon, n, integrand) / width;
    let h = width / n as f64;
    let half_p = p / 2.0;
    let stderr = if libm::floor(half_p) == half_p {
        let a = g.abs_sum_at(sigma);
        let omega = half_p * math::ln(g.degree() as f64);
        let h4 = h * h * h * h;
        h4 * math::powf(a, p) * omega * omega * omega * omega / 180.0
    } else {
        let coarse = quad::simpson(-horizon, horizon, (n / 2).max(2), integrand) / width;
        (value - coarse).abs() / 15.0
    };
    Ok(MeanEstimate {
        value: value.max(0.0),
        p,
        sigma,
        method: MeanMethod::TimeAverage,
        extent: horizon,
        stderr,
        mode: MeanMode::Power,
    })
}

#[derive(Debug, Clone, Copy)]
struct Welford {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Welford {
    const EMPTY: Welford = Welford {
        n: 0.0,
        mean: 0.0,
        m2: 0.0,
    };

    fn push(&mut self, x: f64) {
        self.n += 1.0;
        let d = x - self.mean;
        self.mean += d / self.n;
        self.m2 += d * (x - self.mean);
    }

    fn merge(a: Welford, b: Welford) -> Welford {
        if a.n == 0.0 {
            return b;
        }
        if b.n == 0.0 {
            return a;
        }
        let n = a.n + b.n;
        let d = b.mean - a.mean;
        Welford {
            n,
            mean: a.mean + d * (b.n / n),
            m2: a.m2 + b.m2 + d * d * (a.n * b.n / n),
        }
    }
}

/// Monte Carlo estimate of `∫|f*(χ)|^p dm(χ)` over `samples` Haar characters.
///
/// Sample `k` uses stream `MC_STREAM_BASE + k` of `seed`; `stderr` is the
/// sample standard deviation over `√samples`.
pub fn mc_torus_mean(
    torus: &Torus,
    f: &DirichletPolynomial,
    p: f64,
    samples: usize,
    seed: u64,
) -> Result<MeanEstimate> {
    check_p(p)?;
    if samples < 100 {
        return Err(Error::param("samples", samples as f64, "must be >= 100"));
    }
    let lifted = torus.lift(f)?;
    let j = lifted.required_length().max(1);
    let stats = reduce::chunked(
        samples,
        Welford::EMPTY,
        |range| {
            let mut w = Welford::EMPTY;
            for k in range {
                let chi = Character::sample_haar_stream(j, seed, rng::MC_STREAM_BASE + k as u64).expect("J >= 1");
                let v = lifted.boundary_eval(&chi).expect("length checked");
                w.push(math::abs_pow(v, p));
            }
            w
        },
        Welford::merge,
    );
    let var = if stats.n > 1.0 {
        (stats.m2 / (stats.n - 1.0)).max(0.0)
    } else {
        0.0
    };
    Ok(MeanEstimate {
        value: stats.mean,
        p,
        sigma: 0.0,
        method: MeanMethod::MonteCarlo,
        extent: samples as f64,
        stderr: math::sqrt(var / stats.n),
        mode: MeanMode::Power,
    })
}

/// Which estimator to use for `M_p^p(σ, f)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanRoute {
    /// Closed form, `p = 2` only.
    Exact2,
    /// Simpson time average; `steps = None` picks [`default_time_steps`].
    TimeAverage { horizon: f64, steps: Option<usize> },
    /// Monte Carlo on the torus applied to `H_σ f`.
    MonteCarlo { samples: usize, seed: u64 },
}

/// `M_p^p(σ, f)` by the chosen route.
pub fn estimate_mean(
    torus: &Torus,
    f: &DirichletPolynomial,
    sigma: f64,
    p: f64,
    route: MeanRoute,
) -> Result<MeanEstimate> {
    check_p(p)?;
    check_sigma(sigma)?;
    match route {
        MeanRoute::Exact2 => {
            if p != 2.0 {
                return Err(Error::param("p", p, "closed form needs p = 2"));
            }
            Ok(exact_mean_2(f, sigma))
        }
        MeanRoute::TimeAverage { horizon, steps } => {
            let steps = steps.unwrap_or_else(|| default_time_steps(f.degree(), horizon));
            time_mean(f, sigma, p, horizon, steps)
        }
        MeanRoute::MonteCarlo { samples, seed } => {
            let g = f.translate_h(sigma)?;
            let mut est = mc_torus_mean(torus, &g, p, samples, seed)?;
            est.sigma = sigma;
            Ok(est)
        }
    }
}

/// Default multiplier applied to a grid-measured `C` before it is used as a bound.
pub const DEFAULT_SAFETY: f64 = 1.1;

/// Empirical `C_f(χ)`: the smallest `C` with `∫_0^T` and `∫_{-T}^0` of
/// `|f*(χ p^{-iτ})|^p` both `≤ C(1+T)` at every grid point `T ≤ T_max`.
///
/// This is a lower estimate of the supremum over all `T > 0`; consumers use
/// [`FlowGrowthCertificate::c_safe`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowGrowthCertificate {
    pub c: f64,
    pub p: f64,
    pub t_max: f64,
    pub grid_step: f64,
    pub chi_ref: Option<Provenance>,
    pub safety: f64,
}

impl FlowGrowthCertificate {
    /// `C × safety`.
    pub fn c_safe(&self) -> f64 {
        self.c * self.safety
    }

    /// `C(1+T)`.
    pub fn bound(&self, horizon: f64) -> f64 {
        self.c * (1.0 + horizon)
    }

    pub fn with_safety(mut self, safety: f64) -> Self {
        self.safety = safety;
        self
    }
}

/// Largest τ-step accepted by [`estimate_cf`]: `π/(10 ln N)`.
pub fn max_flow_step(degree: usize) -> f64 {
    let l = math::ln(degree.max(1) as f64);
    if l == 0.0 {
        f64::INFINITY
    } else {
        PI / (10.0 * l)
    }
}

/// Cumulative flow integrals on the τ-grid `i·h`, `i = 0..=n`.
#[derive(Debug, Clone)]
pub struct FlowProfile {
    pub step: f64,
    /// `∫_0^{ih} |f*(χ p^{-iτ})|^p dτ`.
    pub forward: Vec<f64>,
    /// `∫_{-ih}^0 |f*(χ p^{-iτ})|^p dτ`.
    pub backward: Vec<f64>,
}

impl FlowProfile {
    pub fn compute(
        torus: &Torus,
        f: &DirichletPolynomial,
        chi: &Character,
        p: f64,
        t_max: f64,
        grid_step: f64,
    ) -> Result<Self> {
        check_p(p)?;
        if !(t_max.is_finite() && t_max >= 1.0) {
            return Err(Error::param("T_max", t_max, "must be finite and >= 1"));
        }
        let max = max_flow_step(f.degree());
        if !(grid_step.is_finite() && grid_step > 0.0) {
            return Err(Error::param("grid_step", grid_step, "must be finite and > 0"));
        }
        if grid_step > max {
            return Err(Error::StepTooCoarse { step: grid_step, max });
        }
        let lifted = torus.lift(f)?;
        lifted.boundary_eval(chi)?;
        let n = libm::ceil(t_max / grid_step) as usize;
        let h = t_max / n as f64;
        let sample = |sign: f64| {
            quad::sample_grid(0.0, h, n, |tau| {
                let v = torus.flow_eval(&lifted, chi, sign * tau).expect("length checked");
                math::abs_pow(v, p)
            })
        };
        let forward = quad::cumulative_trapezoid(&sample(1.0), h);
        let backward = quad::cumulative_trapezoid(&sample(-1.0), h);
        Ok(Self {
            step: h,
            forward,
            backward,
        })
    }

    /// `max_i max(forward[i], backward[i]) / (1 + i·h)` over `i ≥ 1`.
    pub fn growth_constant(&self) -> f64 {
        self.forward
            .iter()
            .zip(&self.backward)
            .enumerate()
            .skip(1)
            .map(|(i, (&a, &b))| a.max(b) / (1.0 + i as f64 * self.step))
            .fold(0.0, f64::max)
    }
}

/// Grid estimate of `C_f(χ)` from trapezoid cumulative integrals.
pub fn estimate_cf(
    torus: &Torus,
    f: &DirichletPolynomial,
    chi: &Character,
    p: f64,
    t_max: f64,
    grid_step: f64,
) -> Result<FlowGrowthCertificate> {
    let profile = FlowProfile::compute(torus, f, chi, p, t_max, grid_step)?;
    Ok(FlowGrowthCertificate {
        c: profile.growth_constant(),
        p,
        t_max,
        grid_step: profile.step,
        chi_ref: chi.provenance(),
        safety: DEFAULT_SAFETY,
    })
}

/// First and second differences of `σ ↦ log M_p(σ, f)` on a grid.
#[derive(Debug, Clone)]
pub struct ConvexityReport {
    pub sigmas: Vec<f64>,
    pub estimates: Vec<MeanEstimate>,
    pub log_means: Vec<f64>,
    /// `log M(σ_{i+1}) - log M(σ_i)`; expected `≤ tolerance`.
    pub first_differences: Vec<f64>,
    pub difference_tolerances: Vec<f64>,
    /// `log M(σ_i) - [λ log M(σ_{i-1}) + (1-λ) log M(σ_{i+1})]` for interior `i`,
    /// with `λ` the interpolation weight; expected `≤ tolerance`.
    pub convexity_defects: Vec<f64>,
    pub defect_tolerances: Vec<f64>,
    pub pass: bool,
}

/// Tolerance used for closed-form (`p = 2`) convexity checks.
pub const EXACT_TOLERANCE: f64 = 1e-10;

/// Checks that `log M_p(σ, f)` is decreasing and convex on `sigma_grid`.
///
/// Tolerances are four times the propagated standard error of each
/// combination, or [`EXACT_TOLERANCE`] when the estimates are exact.
pub fn convexity_report(
    torus: &Torus,
    f: &DirichletPolynomial,
    p: f64,
    sigma_grid: &[f64],
    route: MeanRoute,
) -> Result<ConvexityReport> {
    if sigma_grid.len() < 3 {
        return Err(Error::param(
            "sigma_grid",
            sigma_grid.len() as f64,
            "needs at least 3 points",
        ));
    }
    for w in sigma_grid.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::param("sigma_grid", w[1], "must be strictly increasing"));
        }
    }
    if !(sigma_grid[0] > 0.0) {
        return Err(Error::param("sigma_grid", sigma_grid[0], "must be > 0"));
    }
    let mut estimates = Vec::with_capacity(sigma_grid.len());
    for &s in sigma_grid {
        estimates.push(estimate_mean(torus, f, s, p, route)?);
    }
    let (log_means, log_se): (Vec<f64>, Vec<f64>) = estimates.iter().map(MeanEstimate::log_root).unzip();
    let tol = |se: f64| (4.0 * se).max(EXACT_TOLERANCE);

    let mut first_differences = Vec::new();
    let mut difference_tolerances = Vec::new();
    for i in 0..log_means.len() - 1 {
        first_differences.push(log_means[i + 1] - log_means[i]);
        difference_tolerances.push(tol(math::hypot(log_se[i], log_se[i + 1])));
    }
    let mut convexity_defects = Vec::new();
    let mut defect_tolerances = Vec::new();
    for i in 1..log_means.len() - 1 {
        let lam = (sigma_grid[i + 1] - sigma_grid[i]) / (sigma_grid[i + 1] - sigma_grid[i - 1]);
        let interp = lam * log_means[i - 1] + (1.0 - lam) * log_means[i + 1];
        convexity_defects.push(log_means[i] - interp);
        let se2 = log_se[i] * log_se[i]
            + lam * lam * log_se[i - 1] * log_se[i - 1]
            + (1.0 - lam) * (1.0 - lam) * log_se[i + 1] * log_se[i + 1];
        defect_tolerances.push(tol(math::sqrt(se2)));
    }
    let ok = |v: &[f64], t: &[f64]| v.iter().zip(t).all(|(x, tol)| *x <= *tol);
    let pass = log_means.iter().all(|x| x.is_finite())
        && ok(&first_differences, &difference_tolerances)
        && ok(&convexity_defects, &defect_tolerances);
    Ok(ConvexityReport {
        sigmas: sigma_grid.to_vec(),
        estimates,
        log_means,
        first_differences,
        difference_tolerances,
        convexity_defects,
        defect_tolerances,
        pass,
    })
}

/// `‖f - H_σ f‖_p`: exact for `p = 2`, otherwise by `route` on the boundary.
pub fn translate_defect(
    torus: &Torus,
    f: &DirichletPolynomial,
    p: f64,
    sigma: f64,
    route: MeanRoute,
) -> Result<MeanEstimate> {
    check_p(p)?;
    if !(sigma.is_finite() && sigma > 0.0) {
        return Err(Error::param("sigma", sigma, "must be finite and > 0"));
    }
    let diff = f - &f.translate_h(sigma)?;
    if p == 2.0 {
        let value = math::sum_compensated(f.coeffs().iter().zip(f.log_table()).map(|(a, &l)| {
            let w = 1.0 - math::exp(-sigma * l);
            a.norm_sqr() * w * w
        }));
        return Ok(MeanEstimate {
            value: math::sqrt(value),
            p,
            sigma,
            method: MeanMethod::Exact2,
            extent: f64::INFINITY,
            stderr: 0.0,
            mode: MeanMode::Root,
        });
    }
    let mut est = estimate_mean(torus, &diff, 0.0, p, route)?.root();
    est.sigma = sigma;
    Ok(est)
}

/// One cell of a sup-sup grid: `(1/2T)∫_{-T}^{T}|f(σ+it)|^p dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowMean {
    pub sigma: f64,
    pub horizon: f64,
    pub mean: f64,
    pub error: f64,
}

/// Finite-window means over a `(σ, T)` grid; exact for `p = 2`, Simpson otherwise.
pub fn window_means(f: &DirichletPolynomial, p: f64, sigma_grid: &[f64], t_grid: &[f64]) -> Result<Vec<WindowMean>> {
    check_p(p)?;
    let mut out = Vec::with_capacity(sigma_grid.len() * t_grid.len());
    for &sigma in sigma_grid {
        check_sigma(sigma)?;
        for &horizon in t_grid {
            let (mean, error) = if p == 2.0 {
                (exact_finite_mean_2(f, sigma, horizon)?, 0.0)
            } else {
                let steps = default_time_steps(f.degree(), horizon);
                let e = time_mean(f, sigma, p, horizon, steps)?;
                (e.value, e.stderr)
            };
            out.push(WindowMean {
                sigma,
                horizon,
                mean,
                error,
            });
        }
    }
    Ok(out)
}

/// Both sides of the translate-average estimate
/// `((1/2T)∫|f(σ+it+z) - f(σ+it)|^p dt)^{1/p} ≤ 3 C^{1/p} |z|/σ² (1+σ+|z|)^{1/p+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslateAverage {
    pub lhs: f64,
    pub rhs: f64,
    pub lhs_error: f64,
}

pub fn translate_average_check(
    f: &DirichletPolynomial,
    sigma: f64,
    z: Complex64,
    horizon: f64,
    p: f64,
    c_hat: f64,
) -> Result<TranslateAverage> {
    check_p(p)?;
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::param("sigma", sigma, "must be finite and > 0"));
    }
    if !(z.re > 0.0 && z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::param("Re z", z.re, "must be finite and > 0"));
    }
    if !(horizon >= 1.0 && horizon.is_finite()) {
        return Err(Error::param("T", horizon, "must be finite and >= 1"));
    }
    let diff = f.shift_difference(z);
    let est = if p == 2.0 {
        MeanEstimate {
            value: exact_finite_mean_2(&diff, sigma, horizon)?.max(0.0),
            p,
            sigma,
            method: MeanMethod::Exact2,
            extent: horizon,
            stderr: 0.0,
            mode: MeanMode::Power,
        }
    } else {
        time_mean(&diff, sigma, p, horizon, default_time_steps(diff.degree(), horizon))?
    };
    let r = est.root();
    let zabs = math::abs(z);
    let rhs = 3.0 * math::powf(c_hat, 1.0 / p) * zabs / (sigma * sigma) * math::powf(1.0 + sigma + zabs, 1.0 / p + 1.0);
    Ok(TranslateAverage {
        lhs: r.value,
        rhs,
        lhs_error: r.stderr,
    })
}
