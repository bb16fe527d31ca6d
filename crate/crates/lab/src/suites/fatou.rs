//! Horizontal boundary limits and partial-sum stabilization.

use dirichlet_hp::math;
use dirichlet_hp::poisson::{fatou_trace, partial_sum_gaps};
use dirichlet_hp::Complex64;

use super::{fmt, Context};
use crate::report::Row;

const SUITE: &str = "fatou";
pub const SIGMAS: [f64; 4] = [0.1, 0.01, 1e-3, 1e-4];
const TIMES: [f64; 3] = [0.0, 5.0, -20.0];

pub(super) fn run(ctx: &Context) -> anyhow::Result<Vec<Row>> {
    let f = &ctx.f;
    ctx.used(&["fatou_trace", "kronecker_twist", "boundary_eval", "vertical_limit"]);
    let lip = f.log_weighted_abs_sum();
    let amp = f.abs_sum();
    let mut rows = Vec::new();
    for t in TIMES {
        let tr = fatou_trace(&ctx.torus, f, &ctx.chi, t, &SIGMAS)?;
        let last = *SIGMAS.last().expect("non-empty");
        let gap = *tr.gaps.last().expect("non-empty");
        rows.push(ctx.row(SUITE, format!("final-gap[t={}]", fmt(t)), gap, lip * last, 0.0));
        for (i, w) in tr.gaps.windows(2).enumerate() {
            let check = format!("gap-decrease[t={},sigma={}]", fmt(t), fmt(SIGMAS[i + 1]));
            rows.push(ctx.row(SUITE, check, w[1] - w[0], 0.0, 0.0));
        }
        let twisted = ctx.torus.kronecker_twist(&ctx.chi, t)?;
        let tw = fatou_trace(&ctx.torus, f, &twisted, 0.0, &SIGMAS)?;
        let drift = tr
            .values
            .iter()
            .zip(&tw.values)
            .map(|(a, b)| (a - b).norm())
            .fold((tr.target - tw.target).norm(), f64::max);
        rows.push(ctx.row(
            SUITE,
            format!("twist-consistency[t={}]", fmt(t)),
            drift,
            1e-10 * (1.0 + amp),
            0.0,
        ));
    }

    // |S_M - S_{M0}| ≤ Σ_{M0 < n ≤ M} |a_n| n^{-σ}
    let n = f.degree();
    let m0s: Vec<usize> = [1, n / 8, n / 4, n / 2].iter().map(|&m| m.max(1)).collect();
    let s = Complex64::new(0.5, 0.0);
    let gaps = partial_sum_gaps(&ctx.torus, f, &ctx.chi, s, &m0s)?;
    for (&m0, &gap) in m0s.iter().zip(&gaps) {
        let tail = math::sum_compensated(
            f.coeffs()[m0..]
                .iter()
                .zip(&f.log_table()[m0..])
                .map(|(a, &l)| math::abs(*a) * (-s.re * l).exp()),
        );
        rows.push(ctx.row(
            SUITE,
            format!("partial-sum-gap[M0={m0}]"),
            gap,
            tail * (1.0 + 1e-12),
            0.0,
        ));
    }
    Ok(rows)
}
