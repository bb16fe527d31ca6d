//! Norms of the vertical limit `f_χ` near the boundary, and consistency of
//! the character machinery it rests on.

use dirichlet_hp::means::{
    default_time_steps, estimate_mean, exact_finite_mean_2, exact_mean_2, finite_horizon_gap_bound, time_mean,
};
use dirichlet_hp::{math, Character, Complex64, MeanRoute};

use super::ergodic::HORIZON_BAND;
use super::{fmt, Context};
use crate::report::Row;

const SUITE: &str = "norms";
const HAAR_SAMPLES: u64 = 2000;

pub(super) fn run(ctx: &Context) -> anyhow::Result<Vec<Row>> {
    let cfg = ctx.cfg;
    let f = &ctx.f;
    let t = cfg.horizon;
    ctx.used(&[
        "vertical_limit",
        "exact_mean_2",
        "exact_finite_mean_2",
        "time_mean",
        "mc_torus_mean",
        "boundary_eval",
        "char_eval",
        "kronecker_twist",
        "translate_v",
        "eval",
        "sample_haar",
    ]);
    let g = ctx.torus.vertical_limit(f, &ctx.chi)?;
    let amp = f.abs_sum();
    let mut rows = Vec::new();

    let sigma = cfg.sigma_grid[0];
    for s in [0.0, sigma] {
        let exact = exact_mean_2(f, s).value;
        let window = exact_finite_mean_2(&g, s, t)?;
        let gap = finite_horizon_gap_bound(&g, s, t)?;
        let check = format!("p2-window[sigma={},T={}]", fmt(s), fmt(t));
        rows.push(ctx.row(SUITE, check, (window - exact).abs(), gap, 0.0));
    }
    for &p in cfg.p_values.iter().filter(|&&p| p != 2.0) {
        let tm = time_mean(&g, sigma, p, t, default_time_steps(g.degree(), t))?;
        let route = MeanRoute::MonteCarlo {
            samples: cfg.mc_samples as usize,
            seed: cfg.seed,
        };
        let mc = estimate_mean(&ctx.torus, f, sigma, p, route)?;
        let check = format!("time-vs-torus[p={},sigma={},T={}]", fmt(p), fmt(sigma), fmt(t));
        let se = 4.0 * math::hypot(tm.stderr, mc.stderr);
        rows.push(ctx.row(SUITE, check, (tm.value - mc.value).abs(), se, HORIZON_BAND * mc.value));
    }

    let b = ctx.torus.boundary_eval(f, &ctx.chi)?;
    rows.push(ctx.row(
        SUITE,
        "boundary-eval".into(),
        (b - g.eval(Complex64::new(0.0, 0.0))).norm(),
        1e-12 * (1.0 + amp),
        0.0,
    ));

    let n = f.degree() as u64;
    let mut worst: f64 = 0.0;
    for m in 1..=n {
        for k in 1..=n / m {
            let lhs = ctx.torus.char_eval(&ctx.chi, m * k)?;
            let rhs = ctx.torus.char_eval(&ctx.chi, m)? * ctx.torus.char_eval(&ctx.chi, k)?;
            worst = worst.max((lhs - rhs).norm());
        }
    }
    rows.push(ctx.row(SUITE, "character-multiplicative".into(), worst, 1e-12, 0.0));

    for tau in [1.0, -37.5, 1000.0] {
        let twisted = ctx.torus.kronecker_twist(&ctx.chi, tau)?;
        let s = Complex64::new(sigma, 2.0);
        let lhs = ctx.torus.vertical_limit(f, &twisted)?.eval(s);
        let rhs = g.translate_v(tau).eval(s);
        let check = format!("flow-identity[tau={}]", fmt(tau));
        rows.push(ctx.row(SUITE, check, (lhs - rhs).norm(), 1e-9 * (1.0 + amp), 0.0));
    }

    let mut first = Complex64::new(0.0, 0.0);
    for k in 0..HAAR_SAMPLES {
        let chi = Character::sample_haar(1, cfg.seed.wrapping_add(k))?;
        first += chi.value_at_prime(0).expect("length 1");
    }
    let m = HAAR_SAMPLES as f64;
    rows.push(ctx.row(SUITE, "haar-first-moment".into(), first.norm() / m, 5.0 / m.sqrt(), 0.0));
    Ok(rows)
}
