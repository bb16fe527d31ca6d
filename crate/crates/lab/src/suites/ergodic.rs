//! Time averages along the flow against torus norms.

use dirichlet_hp::math;
use dirichlet_hp::means::{
    default_time_steps, exact_finite_mean_2, exact_mean_2, finite_horizon_gap_bound, mc_torus_mean, time_mean,
};

use super::{fmt, Context};
use crate::report::Row;

const SUITE: &str = "ergodic";

/// Relative band for comparisons whose finite-horizon bias has no proven rate.
pub(super) const HORIZON_BAND: f64 = 0.05;

pub(super) fn run(ctx: &Context) -> anyhow::Result<Vec<Row>> {
    let cfg = ctx.cfg;
    let t = cfg.horizon;
    let g = ctx.torus.vertical_limit(&ctx.f, &ctx.chi)?;
    ctx.used(&[
        "vertical_limit",
        "exact_mean_2",
        "exact_finite_mean_2",
        "time_mean",
        "mc_torus_mean",
    ]);
    let mut rows = Vec::new();

    let l2 = exact_mean_2(&ctx.f, 0.0).value;
    let gap = finite_horizon_gap_bound(&g, 0.0, t)?;
    let window = exact_finite_mean_2(&g, 0.0, t)?;
    rows.push(ctx.row(
        SUITE,
        format!("finite-window-p2[T={}]", fmt(t)),
        (window - l2).abs(),
        gap,
        0.0,
    ));

    let tm = time_mean(&g, 0.0, 2.0, t, default_time_steps(g.degree(), t))?;
    let dev = (tm.value - l2).abs();
    rows.push(ctx.row(
        SUITE,
        format!("time-average-p2[T={}]", fmt(t)),
        dev,
        gap + tm.stderr,
        0.0,
    ));
    let rel = if l2 > 0.0 { dev / l2 } else { dev };
    rows.push(ctx.row(
        SUITE,
        format!("time-average-p2-relative[T={}]", fmt(t)),
        rel,
        HORIZON_BAND,
        0.0,
    ));

    for &p in cfg.p_values.iter().filter(|&&p| p != 2.0) {
        let tm = time_mean(&g, 0.0, p, t, default_time_steps(g.degree(), t))?;
        let mc = mc_torus_mean(&ctx.torus, &ctx.f, p, cfg.mc_samples as usize, cfg.seed)?;
        let check = format!("time-vs-torus[p={},T={}]", fmt(p), fmt(t));
        let se = 4.0 * math::hypot(tm.stderr, mc.stderr);
        rows.push(ctx.row(SUITE, check, (tm.value - mc.value).abs(), se, HORIZON_BAND * mc.value));
    }
    Ok(rows)
}
