//! Poisson extension against direct evaluation, and the growth bounds.

use dirichlet_hp::poisson::{check_pointwise_bound, check_supsup_bound, kernel_normalization, poisson_extend};
use dirichlet_hp::rng::{CounterRng, POLYNOMIAL_STREAM};
use dirichlet_hp::{FlowGrowthCertificate, HalfPlanePoint, PoissonQuadratureSpec};
use rand::Rng;

use super::{fmt, Context};
use crate::report::Row;

const SUITE: &str = "poisson";
pub const POINTS: [(f64, f64); 3] = [(0.8, 0.3), (0.2, 0.0), (0.1, 5.0)];
pub const ABS_TOL: f64 = 1e-3;
pub(super) const TAIL_TARGET: f64 = 2.5e-4;
const POINT_STREAM: u64 = POLYNOMIAL_STREAM + 1;
pub const POINT_COUNT: usize = 100;
pub const SUPSUP_SIGMAS: [f64; 6] = [0.05, 0.1, 0.25, 0.5, 1.0, 2.0];
pub const SUPSUP_HORIZONS: [f64; 4] = [1.0, 10.0, 100.0, 1000.0];

/// A window meeting the tail target, with a certificate that covers it.
pub fn window_for(
    ctx: &Context,
    s: HalfPlanePoint,
    target: f64,
) -> anyhow::Result<(FlowGrowthCertificate, PoissonQuadratureSpec)> {
    let mut t_max = ctx.cfg.horizon;
    for _ in 0..4 {
        let cert = ctx.cert(2.0, t_max)?;
        let spec = PoissonQuadratureSpec::for_target(s.sigma, s.t, &cert, target)?;
        let reach = s.t.abs() + spec.trunc_t;
        if cert.t_max >= reach {
            return Ok((cert, spec));
        }
        t_max = reach.ceil();
    }
    anyhow::bail!("certificate window did not settle at {s:?}")
}

/// `n` points with `σ ∈ (0, 2]` and `|t| ≤ 50` from the point stream of `seed`.
pub fn sample_points(seed: u64, n: usize) -> Vec<HalfPlanePoint> {
    let mut rng = CounterRng::new(seed).stream(POINT_STREAM);
    (0..n)
        .map(|_| {
            let sigma = 2.0 * (1.0 - rng.random::<f64>());
            let t = 100.0 * rng.random::<f64>() - 50.0;
            HalfPlanePoint::new(sigma, t).expect("sigma > 0")
        })
        .collect()
}

pub(super) fn run(ctx: &Context) -> anyhow::Result<Vec<Row>> {
    let cfg = ctx.cfg;
    ctx.used(&[
        "poisson_extend",
        "vertical_limit",
        "eval",
        "check_pointwise_bound",
        "check_supsup_bound",
    ]);
    let g = ctx.torus.vertical_limit(&ctx.f, &ctx.chi)?;
    let mut rows = Vec::new();
    for (sigma, t) in POINTS {
        let s = HalfPlanePoint::new(sigma, t)?;
        let (cert, spec) = window_for(ctx, s, TAIL_TARGET)?;
        let label = format!("{}{:+}i", fmt(sigma), t);
        let norm = (kernel_normalization(sigma, &spec) - 1.0).abs();
        rows.push(ctx.row(SUITE, format!("kernel-normalization[s={label}]"), norm, 1e-10, 0.0));
        let v = poisson_extend(&ctx.torus, &ctx.f, &ctx.chi, s, &cert, &spec)?;
        let err = (v.value - g.eval_at(s)).norm();
        rows.push(ctx.row(SUITE, format!("extension[s={label}]"), err, v.bound(), 0.0));
        rows.push(ctx.row(SUITE, format!("extension-abs[s={label}]"), err, ABS_TOL, 0.0));
    }

    let points = sample_points(cfg.seed, POINT_COUNT);
    for &p in &cfg.p_values {
        let cert = ctx.cert(p, cfg.horizon)?;
        for (i, r) in check_pointwise_bound(&ctx.torus, &ctx.f, &ctx.chi, &cert, &points)?
            .iter()
            .enumerate()
        {
            let check = format!("pointwise[p={},i={i}]", fmt(p));
            rows.push(ctx.row(SUITE, check, r.measured, r.bound, r.tolerance));
        }
        let ss = check_supsup_bound(&ctx.torus, &ctx.f, &ctx.chi, &cert, &SUPSUP_SIGMAS, &SUPSUP_HORIZONS)?;
        rows.push(ctx.row(SUITE, format!("supsup[p={}]", fmt(p)), ss.sup, ss.bound, ss.tolerance));
    }
    Ok(rows)
}
