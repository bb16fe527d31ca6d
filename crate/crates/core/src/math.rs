//! Scalar helpers shared by the numerical modules.
//!
//! Elementary functions go through `libm` so the crate builds without `std`
//! and produces the same bits on every target.

use core::f64::consts::{PI, TAU};

use num_complex::Complex64;

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[inline]
pub fn atan(x: f64) -> f64 {
    libm::atan(x)
}

/// `Γ(x)` for real `x`.
#[inline]
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    let (s, c) = libm::sincos(theta);
    Complex64::new(c, s)
}

#[inline]
pub fn abs(z: Complex64) -> f64 {
    hypot(z.re, z.im)
}

/// `e^{z}` for complex `z`.
#[inline]
pub fn cexp(z: Complex64) -> Complex64 {
    cis(z.im) * exp(z.re)
}

/// Principal power `z^a` for real `a`, with the branch cut on the negative axis.
#[inline]
pub fn cpowf(z: Complex64, a: f64) -> Complex64 {
    let r = abs(z);
    if r == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let theta = libm::atan2(z.im, z.re);
    cis(a * theta) * powf(r, a)
}

/// Reduces an angle to `[0, 2π)`.
#[inline]
pub fn wrap_angle(theta: f64) -> f64 {
    let mut r = libm::fmod(theta, TAU);
    if r < 0.0 {
        r += TAU;
    }
    if r >= TAU {
        r -= TAU;
    }
    r
}

/// `sin(x)/x` with `sinc(0) = 1`.
#[inline]
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        libm::sin(x) / x
    }
}

/// `|z|^p` computed as `exp((p/2)·ln|z|²)`, with zeros flushed to `0`.
#[inline]
pub fn abs_pow(z: Complex64, p: f64) -> f64 {
    let sq = z.norm_sqr();
    if sq == 0.0 {
        return 0.0;
    }
    if p == 2.0 {
        sq
    } else if p == 4.0 {
        sq * sq
    } else if p == 1.0 {
        sqrt(sq)
    } else {
        exp(0.5 * p * ln(sq))
    }
}

pub(crate) const FRAC_1_PI: f64 = 1.0 / PI;

/// Kahan–Babuška (Neumaier) compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    pub const fn new() -> Self {
        Self { sum: 0.0, carry: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Compensated accumulator for complex terms (real and imaginary parts independently).
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedComplex {
    re: Compensated,
    im: Compensated,
}

impl CompensatedComplex {
    pub const fn new() -> Self {
        Self {
            re: Compensated::new(),
            im: Compensated::new(),
        }
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Compensated sum of an iterator of reals.
pub fn sum_compensated<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    let mut acc = Compensated::new();
    for x in it {
        acc.add(x);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_angle_stays_in_range() {
        for &x in &[-1e6, -TAU, -1e-300, 0.0, 3.0, TAU, 7.5, 1e7] {
            let r = wrap_angle(x);
            assert!((0.0..TAU).contains(&r), "{x} -> {r}");
        }
        assert_eq!(wrap_angle(TAU), 0.0);
    }

    #[test]
    fn sinc_series_matches_direct() {
        for &x in &[1e-5, 5e-5, 9.9e-5, 1.01e-4] {
            assert!((sinc(x) - libm::sin(x) / x).abs() <= 2.0 * f64::EPSILON);
        }
        assert_eq!(sinc(0.0), 1.0);
    }

    #[test]
    fn abs_pow_flushes_zero() {
        let z = Complex64::new(0.0, 0.0);
        for &p in &[1.0, 1.5, 2.0, 3.0] {
            assert_eq!(abs_pow(z, p), 0.0);
        }
        let w = Complex64::new(3.0, 4.0);
        assert!((abs_pow(w, 1.5) - 5f64.powf(1.5)).abs() < 1e-12);
        assert_eq!(abs_pow(w, 2.0), 25.0);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = Compensated::new();
        acc.add(1.0);
        for _ in 0..10_000 {
            acc.add(1e-16);
        }
        assert!((acc.value() - (1.0 + 1e-12)).abs() < 1e-18);
    }

    #[test]
    fn principal_power() {
        let z = Complex64::new(0.0, 2.0);
        let w = cpowf(z, 2.0);
        assert!((w - Complex64::new(-4.0, 0.0)).norm() < 1e-14);
    }
}
