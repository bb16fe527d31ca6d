//! Riesz means: pointwise convergence, the contour identity and Hankel's formula.

use dirichlet_hp::riesz::{convergence_study, hankel_check, riesz_contour, riesz_mean};
use dirichlet_hp::{Complex64, RieszParams};

use super::{fmt, Context};
use crate::report::Row;

const SUITE: &str = "riesz";
pub const N_LIST: [u64; 4] = [100, 1_000, 10_000, 100_000];
pub const ORDERS: [f64; 3] = [2.0, 3.0, 3.5];
pub const HANKEL_U: [f64; 7] = [-2.0, -1.0, -0.1, 0.0, 0.5, 1.0, 2.0];
pub const HANKEL_TOL: f64 = 1e-3;

pub(super) fn run(ctx: &Context) -> anyhow::Result<Vec<Row>> {
    let f = &ctx.f;
    ctx.used(&[
        "convergence_study",
        "riesz_mean",
        "riesz_contour",
        "hankel_check",
        "eval",
    ]);
    let mut rows = Vec::new();
    let s = Complex64::new(0.5, 0.0);
    for k in ORDERS {
        let study = convergence_study(f, k, s, &N_LIST)?;
        for pt in &study {
            let check = format!("error-bound[k={},N={}]", fmt(k), pt.n);
            rows.push(ctx.row(SUITE, check, pt.abs_error, pt.bound, 0.0));
        }
        for w in study.windows(2) {
            let check = format!("error-decrease[k={},N={}]", fmt(k), w[1].n);
            rows.push(ctx.row(SUITE, check, w[1].abs_error - w[0].abs_error, 0.0, 0.0));
        }
    }

    for (n, k) in [(10, 2.0), (10, 3.5), (100, 2.0), (100, 3.5)] {
        let params = RieszParams::new(n, k)?;
        for s in [Complex64::new(0.5, 0.0), Complex64::new(0.8, 3.0)] {
            let c = riesz_contour(f, &params, s)?;
            let d = (c.value - riesz_mean(f, &params, s)).norm();
            let check = format!("contour-identity[N={n},k={},s={}{:+}i]", fmt(k), fmt(s.re), s.im);
            rows.push(ctx.row(SUITE, check, d, c.bound(), 0.0));
        }
    }

    for u in HANKEL_U {
        let h = hankel_check(u, 3.0, 3.0, 200.0)?;
        rows.push(ctx.row(SUITE, format!("hankel[u={}]", fmt(u)), h.residual, HANKEL_TOL, 0.0));
    }
    Ok(rows)
}
