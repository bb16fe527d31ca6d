//! Hardy convexity of `σ ↦ log M_p(σ, f)`, the translate defect `‖f - H_σ f‖_p`
//! and the translate-average estimate.

use dirichlet_hp::math;
use dirichlet_hp::means::{convexity_report, translate_average_check, translate_defect};
use dirichlet_hp::{Complex64, MeanRoute};

use super::{fmt, Context};
use crate::report::Row;

const SUITE: &str = "carlson";

pub(super) fn route(ctx: &Context, p: f64) -> MeanRoute {
    if p == 2.0 {
        MeanRoute::Exact2
    } else {
        MeanRoute::MonteCarlo {
            samples: ctx.cfg.mc_samples as usize,
            seed: ctx.cfg.seed,
        }
    }
}

pub(super) fn run(ctx: &Context) -> anyhow::Result<Vec<Row>> {
    let cfg = ctx.cfg;
    let f = &ctx.f;
    let mut rows = Vec::new();
    for &p in &cfg.p_values {
        let route = route(ctx, p);
        ctx.used(&[
            "convexity_report",
            if p == 2.0 { "exact_mean_2" } else { "mc_torus_mean" },
        ]);
        let rep = convexity_report(&ctx.torus, f, p, &cfg.sigma_grid, route)?;
        for (i, (&d, &tol)) in rep.first_differences.iter().zip(&rep.difference_tolerances).enumerate() {
            let check = format!("log-mean-decrease[p={},sigma={}]", fmt(p), fmt(cfg.sigma_grid[i + 1]));
            rows.push(ctx.row(SUITE, check, d, tol, 0.0));
        }
        for (i, (&d, &tol)) in rep.convexity_defects.iter().zip(&rep.defect_tolerances).enumerate() {
            let check = format!("log-mean-convexity[p={},sigma={}]", fmt(p), fmt(cfg.sigma_grid[i + 1]));
            rows.push(ctx.row(SUITE, check, d, tol, 0.0));
        }

        ctx.used(&["translate_defect", "translate_h"]);
        for &sigma in &cfg.sigma_grid {
            let d = translate_defect(&ctx.torus, f, p, sigma, route)?;
            // ‖f - H_σ f‖_p ≤ sup |f - H_σ f| ≤ Σ |a_n| (1 - n^{-σ})
            let sup = math::sum_compensated(
                f.coeffs()
                    .iter()
                    .zip(f.log_table())
                    .map(|(a, &l)| -math::abs(*a) * (-sigma * l).exp_m1()),
            );
            let check = format!("translate-defect[p={},sigma={}]", fmt(p), fmt(sigma));
            rows.push(ctx.row(SUITE, check, d.value, sup + 4.0 * d.stderr, 0.0));
        }

        let cert = ctx.cert(p, cfg.horizon.min(1000.0))?;
        let g = ctx.torus.vertical_limit(f, &ctx.chi)?;
        ctx.used(&["vertical_limit"]);
        let horizon = cfg.horizon.min(100.0);
        let grid = &cfg.sigma_grid;
        for &sigma in &[grid[0], grid[grid.len() / 2], grid[grid.len() - 1]] {
            for z in [Complex64::new(0.1, 0.1), Complex64::new(0.5, -0.5)] {
                if p == 2.0 {
                    ctx.used(&["exact_finite_mean_2"]);
                } else {
                    ctx.used(&["time_mean"]);
                }
                let r = translate_average_check(&g, sigma, z, horizon, p, cert.c_safe())?;
                let check = format!(
                    "translate-average[p={},sigma={},z={}{:+}i]",
                    fmt(p),
                    fmt(sigma),
                    fmt(z.re),
                    z.im
                );
                rows.push(ctx.row(SUITE, check, r.lhs, r.rhs, 0.05 * r.rhs + r.lhs_error));
            }
        }
    }
    Ok(rows)
}
