//! Quadrature rules used by the mean, Riesz and Poisson modules.
//!
//! Uniform rules evaluate their nodes through the deterministic chunked
//! reduction, so a result never depends on how many threads ran it.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::math::{Compensated, CompensatedComplex};
use crate::reduce;

/// Composite Simpson rule on `[a, b]` with `intervals` subintervals (rounded up to even).
pub fn simpson<F>(a: f64, b: f64, intervals: usize, f: F) -> f64
where
    F: Fn(f64) -> f64 + Sync,
{
    let n = intervals.max(2).next_multiple_of(2);
    let h = (b - a) / n as f64;
    let sum = reduce::chunked(
        n + 1,
        0.0,
        |range| {
            let mut acc = Compensated::new();
            for i in range {
                let w = if i == 0 || i == n {
                    1.0
                } else if i % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                acc.add(w * f(a + i as f64 * h));
            }
            acc.value()
        },
        |x, y| x + y,
    );
    sum * h / 3.0
}

/// Trapezoid rule for a complex integrand on `[a, b]` with `intervals` subintervals.
pub fn trapezoid_complex<F>(a: f64, b: f64, intervals: usize, f: F) -> Complex64
where
    F: Fn(f64) -> Complex64 + Sync,
{
    let n = intervals.max(1);
    let h = (b - a) / n as f64;
    let sum = reduce::chunked(
        n + 1,
        Complex64::new(0.0, 0.0),
        |range| {
            let mut acc = CompensatedComplex::new();
            for i in range {
                let w = if i == 0 || i == n { 0.5 } else { 1.0 };
                acc.add(f(a + i as f64 * h) * w);
            }
            acc.value()
        },
        |x, y| x + y,
    );
    sum * h
}

/// Real trapezoid rule, same node layout as [`trapezoid_complex`].
pub fn trapezoid<F>(a: f64, b: f64, intervals: usize, f: F) -> f64
where
    F: Fn(f64) -> f64 + Sync,
{
    trapezoid_complex(a, b, intervals, |x| Complex64::new(f(x), 0.0)).re
}

/// Values of `f` on the uniform grid `a + i·h`, `i = 0..=intervals`.
pub fn sample_grid<F>(a: f64, h: f64, intervals: usize, f: F) -> Vec<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    reduce::collect(intervals + 1, |i| f(a + i as f64 * h))
}

/// Running trapezoid integrals of equally spaced samples; `out[0] = 0`.
pub fn cumulative_trapezoid(values: &[f64], h: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(values.len());
    let mut acc = Compensated::new();
    out.push(0.0);
    for w in values.windows(2) {
        acc.add(0.5 * h * (w[0] + w[1]));
        out.push(acc.value());
    }
    out
}

/// Result of an adaptive integration: value and accumulated Richardson error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Adaptive {
    pub value: Complex64,
    pub error: f64,
}

const MAX_DEPTH: u32 = 48;

fn simpson_step(a: f64, fa: Complex64, b: f64, fb: Complex64, fm: Complex64) -> Complex64 {
    (fa + fm * 4.0 + fb) * ((b - a) / 6.0)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F>(
    f: &F,
    a: f64,
    fa: Complex64,
    b: f64,
    fb: Complex64,
    m: f64,
    fm: Complex64,
    whole: Complex64,
    tol: f64,
    depth: u32,
    out: &mut CompensatedComplex,
    err: &mut Compensated,
) where
    F: Fn(f64) -> Complex64,
{
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_step(a, fa, m, fm, flm);
    let right = simpson_step(m, fm, b, fb, frm);
    let diff = left + right - whole;
    let d = crate::math::abs(diff);
    if depth >= MAX_DEPTH || d <= 15.0 * tol {
        out.add(left + right + diff / 15.0);
        err.add(d / 15.0);
        return;
    }
    adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, out, err);
    adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, out, err);
}

/// Adaptive Simpson on a single interval to absolute tolerance `tol`.
pub fn adaptive_simpson<F>(f: &F, a: f64, b: f64, tol: f64) -> Adaptive
where
    F: Fn(f64) -> Complex64,
{
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson_step(a, fa, b, fb, fm);
    let mut out = CompensatedComplex::new();
    let mut err = Compensated::new();
    adapt(f, a, fa, b, fb, m, fm, whole, tol, 0, &mut out, &mut err);
    Adaptive {
        value: out.value(),
        error: err.value(),
    }
}

/// Adaptive Simpson over `panels` equal panels of `[a, b]`, each with tolerance
/// `tol / panels`; panels run in parallel and are summed in order.
pub fn adaptive_simpson_panels<F>(f: &F, a: f64, b: f64, panels: usize, tol: f64) -> Adaptive
where
    F: Fn(f64) -> Complex64 + Sync,
{
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    let parts = reduce::collect(panels, |i| {
        let lo = a + i as f64 * h;
        let hi = if i + 1 == panels { b } else { lo + h };
        adaptive_simpson(f, lo, hi, tol / panels as f64)
    });
    let mut v = CompensatedComplex::new();
    let mut e = Compensated::new();
    for p in parts {
        v.add(p.value);
        e.add(p.error);
    }
    Adaptive {
        value: v.value(),
        error: e.value(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math;

    #[test]
    fn simpson_exact_on_cubics() {
        let v = simpson(-1.0, 2.0, 2, |x| x * x * x - 2.0 * x + 1.0);
        // ∫_{-1}^{2} x³ - 2x + 1 = 15/4 - 3 + 3
        assert!((v - 3.75).abs() < 1e-14);
    }

    #[test]
    fn trapezoid_exact_on_lines() {
        let v = trapezoid(0.0, 3.0, 7, |x| 2.0 * x + 1.0);
        assert!((v - 12.0).abs() < 1e-13);
    }

    #[test]
    fn cumulative_matches_total() {
        let h = 0.01;
        let vals = sample_grid(0.0, h, 300, libm::cos);
        let cum = cumulative_trapezoid(&vals, h);
        assert_eq!(cum.len(), vals.len());
        assert!((cum[300] - libm::sin(3.0)).abs() < 1e-4);
    }

    #[test]
    fn adaptive_oscillatory() {
        let f = |x: f64| math::cis(5.0 * x);
        let r = adaptive_simpson_panels(&f, 0.0, 10.0, 8, 1e-12);
        let exact = (math::cis(50.0) - Complex64::new(1.0, 0.0)) / Complex64::new(0.0, 5.0);
        assert!((r.value - exact).norm() < 1e-10);
        assert!(r.error < 1e-10);
    }
}
