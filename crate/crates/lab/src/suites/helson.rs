//! `√(Σ|a_n|²/d(n)) ≤ ‖f‖_1` and the divisor identity behind it.

use std::f64::consts::PI;

use dirichlet_hp::arith::{divisor_weight_product, divisor_weighted_sum, sieve_primes};
use dirichlet_hp::means::mc_torus_mean;
use dirichlet_hp::{math, Sieve};

use super::{fmt, Context};
use crate::report::Row;

const SUITE: &str = "helson";
const IDENTITY_LIMIT: u32 = 20_000;
const ZETA_LIMIT: u32 = 100_000;

/// `√(Σ |a_n|²/d(n))`.
pub fn helson_lhs(sieve: &Sieve, coeffs: &[dirichlet_hp::Complex64]) -> dirichlet_hp::Result<f64> {
    let mut acc = math::Compensated::new();
    for (i, a) in coeffs.iter().enumerate() {
        acc.add(a.norm_sqr() / sieve.divisor_count(i as u64 + 1)? as f64);
    }
    Ok(acc.value().sqrt())
}

pub(super) fn run(ctx: &Context) -> anyhow::Result<Vec<Row>> {
    let cfg = ctx.cfg;
    ctx.used(&["divisor_count", "mc_torus_mean", "sieve_primes", "bohr_lift"]);
    let mut rows = Vec::new();

    let lhs = helson_lhs(ctx.torus.sieve(), ctx.f.coeffs())?;
    let l1 = mc_torus_mean(&ctx.torus, &ctx.f, 1.0, cfg.mc_samples as usize, cfg.seed)?;
    rows.push(ctx.row(SUITE, "inequality-mc".into(), lhs, l1.value + 4.0 * l1.stderr, 0.0));

    // f = 1 + 2^{-s}: √(1 + 1/2) against E|1 + e^{iθ}| = 4/π
    rows.push(ctx.row(
        SUITE,
        "inequality-closed-form[1+2^-s]".into(),
        1.5f64.sqrt(),
        4.0 / PI,
        0.0,
    ));

    let primes = sieve_primes(IDENTITY_LIMIT)?;
    let sieve = Sieve::new(IDENTITY_LIMIT)?;
    for sigma in [0.75, 1.0, 1.5] {
        let moduli: Vec<f64> = primes.iter().map(|&p| f64::from(p).powf(-sigma)).collect();
        let part = divisor_weighted_sum(&sieve, &moduli, u64::from(IDENTITY_LIMIT))?;
        let full = divisor_weight_product(&moduli)?;
        let check = format!("divisor-partial-sum[sigma={},N={IDENTITY_LIMIT}]", fmt(sigma));
        rows.push(ctx.row(SUITE, check, part, full, 0.0));
    }

    let moduli: Vec<f64> = sieve_primes(ZETA_LIMIT)?.iter().map(|&p| 1.0 / f64::from(p)).collect();
    let target = PI.powi(4) / 36.0;
    let full = divisor_weight_product(&moduli)?;
    let l = f64::from(ZETA_LIMIT);
    // Π_{p > L} (1 - p^{-2})^{-2} - 1 ≈ 2/(L ln L)
    rows.push(ctx.row(
        SUITE,
        format!("divisor-product-zeta2-squared[P={ZETA_LIMIT}]"),
        (full - target).abs(),
        target * 4.0 / (l * l.ln()),
        0.0,
    ));
    Ok(rows)
}
