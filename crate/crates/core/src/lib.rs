//! Numerics for the `H^p` theory of ordinary Dirichlet series.
//!
//! The crate works with finite Dirichlet polynomials `f(s) = Σ a_n n^{-s}` and
//! the objects that act on them:
//!
//! * [`series`]: the polynomial type, direct evaluation, horizontal and
//!   vertical translations.
//! * [`arith`]: smallest-prime-factor sieve, the Bohr lift `n ↦ (α_j)` and
//!   the divisor function.
//! * [`character`]: points of the infinite torus restricted to finitely many
//!   primes, Haar sampling and the Kronecker flow `χ ↦ χ·p^{-iτ}`.
//! * [`means`]: p-means by closed form, time-average quadrature and Monte
//!   Carlo over the torus; the flow growth constant `C_f(χ)`.
//! * [`riesz`]: Riesz means of the first kind and their contour integral.
//! * [`poisson`]: the half-plane Poisson extension of vertical limit functions
//!   and the growth bounds it satisfies.
//!
//! The crate is `no_std` (with `alloc`) when built without the `std` feature.
//! The default `parallel` feature evaluates quadrature nodes and Monte Carlo
//! samples on the rayon pool; every reduction is done over fixed chunks in a
//! fixed order, so results are bit-identical with or without it and for any
//! thread count.

#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod arith;
pub mod character;
pub mod check;
mod error;
pub mod math;
pub mod means;
pub mod poisson;
pub mod quad;
mod reduce;
pub mod riesz;
pub mod rng;
pub mod series;

pub use arith::{BohrIndex, Sieve};
pub use character::{Character, Provenance, Torus};
pub use check::CheckStatus;
pub use error::{Error, Result};
pub use means::{FlowGrowthCertificate, MeanEstimate, MeanMethod, MeanRoute};
pub use num_complex::Complex64;
pub use poisson::PoissonQuadratureSpec;
pub use riesz::RieszParams;
pub use series::{DirichletPolynomial, HalfPlanePoint};

/// Names of the public operations, used by the harness coverage check.
pub const OPERATIONS: &[&str] = &[
    "eval",
    "translate_h",
    "translate_v",
    "sieve_primes",
    "bohr_lift",
    "divisor_count",
    "sample_haar",
    "char_eval",
    "kronecker_twist",
    "vertical_limit",
    "boundary_eval",
    "exact_mean_2",
    "exact_finite_mean_2",
    "time_mean",
    "mc_torus_mean",
    "estimate_cf",
    "convexity_report",
    "translate_defect",
    "riesz_mean",
    "riesz_contour",
    "hankel_check",
    "convergence_study",
    "poisson_extend",
    "fatou_trace",
    "check_pointwise_bound",
    "check_supsup_bound",
];
