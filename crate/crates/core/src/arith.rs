//! Multiplicative arithmetic: smallest-prime-factor sieve, the Bohr lift and
//! the divisor function.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Add;

use crate::math;
use crate::{Error, Result};

/// Prime-exponent multi-index of an integer over the first primes:
/// `n = Π p_j^{α_j}`.
///
/// The length is the index of the largest prime factor (zero for `n = 1`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BohrIndex {
    exponents: Vec<u32>,
}

impl BohrIndex {
    pub fn from_exponents(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of primes needed, i.e. the index of the largest prime factor.
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Exponent at prime index `j` (zero beyond the stored length).
    pub fn get(&self, j: usize) -> u32 {
        self.exponents.get(j).copied().unwrap_or(0)
    }

    /// Non-zero entries as `(prime index, exponent)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(j, &a)| (j, a))
    }

    /// `Π (α_j + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.exponents.iter().map(|&a| u64::from(a) + 1).product()
    }

    /// `Π p_j^{α_j}`; `None` on overflow or if `primes` is too short.
    pub fn reconstruct(&self, primes: &[u32]) -> Option<u64> {
        let mut n: u64 = 1;
        for (j, a) in self.support() {
            let p = u64::from(*primes.get(j)?);
            for _ in 0..a {
                n = n.checked_mul(p)?;
            }
        }
        Some(n)
    }
}

impl Add for &BohrIndex {
    type Output = BohrIndex;

    fn add(self, rhs: Self) -> BohrIndex {
        let len = self.len().max(rhs.len());
        BohrIndex::from_exponents((0..len).map(|j| self.get(j) + rhs.get(j)).collect())
    }
}

/// Linear sieve holding the smallest prime factor of every `n ≤ limit`.
#[derive(Debug, Clone)]
pub struct Sieve {
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl Sieve {
    pub fn new(limit: u32) -> Result<Self> {
        if limit < 2 {
            return Err(Error::SieveLimit(u64::from(limit)));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                if p > si || i * p as usize > n {
                    break;
                }
                spf[i * p as usize] = p;
            }
        }
        Ok(Self { spf, primes })
    }

    /// A sieve large enough to contain the first `count` primes.
    pub fn with_prime_count(count: usize) -> Self {
        let mut limit = prime_upper_bound(count).max(2);
        loop {
            let s = Self::new(limit).expect("limit >= 2");
            if s.primes.len() >= count {
                return s;
            }
            limit = limit.saturating_mul(2);
        }
    }

    pub fn limit(&self) -> u32 {
        (self.spf.len() - 1) as u32
    }

    /// All primes up to the limit, increasing.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn is_prime(&self, n: u32) -> bool {
        n >= 2 && (n as usize) < self.spf.len() && self.spf[n as usize] == n
    }

    /// Zero-based index of the prime `p` in the prime sequence.
    pub fn prime_index(&self, p: u32) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }

    fn check(&self, n: u64) -> Result<u32> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        if n > u64::from(self.limit()) {
            return Err(Error::BeyondSieve {
                n,
                limit: u64::from(self.limit()),
            });
        }
        Ok(n as u32)
    }

    /// Prime factorization as `(p, e)` pairs in increasing `p`.
    pub fn factorize(&self, n: u64) -> Result<Vec<(u32, u32)>> {
        let mut m = self.check(n)?;
        let mut out: Vec<(u32, u32)> = Vec::new();
        while m > 1 {
            let p = self.spf[m as usize];
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        Ok(out)
    }

    /// Bohr lift `n ↦ (α_1, …, α_J)` with `J` the index of the largest prime factor.
    pub fn bohr_lift(&self, n: u64) -> Result<BohrIndex> {
        let factors = self.factorize(n)?;
        let len = factors
            .last()
            .map_or(0, |&(p, _)| self.prime_index(p).expect("sieved prime") + 1);
        let mut exponents = vec![0u32; len];
        for (p, e) in factors {
            exponents[self.prime_index(p).expect("sieved prime")] = e;
        }
        Ok(BohrIndex { exponents })
    }

    /// Number of divisors `d(n)`.
    pub fn divisor_count(&self, n: u64) -> Result<u64> {
        Ok(self.factorize(n)?.into_iter().map(|(_, e)| u64::from(e) + 1).product())
    }

    /// Number of primes `≤ n` (capped at the limit).
    pub fn prime_count(&self, n: u64) -> usize {
        self.primes.partition_point(|&p| u64::from(p) <= n)
    }
}

/// All primes `≤ limit` in increasing order.
pub fn sieve_primes(limit: u32) -> Result<Vec<u32>> {
    Ok(Sieve::new(limit)?.primes)
}

/// Upper bound for the `count`-th prime (Rosser: `p_k < k(ln k + ln ln k)` for `k ≥ 6`).
fn prime_upper_bound(count: usize) -> u32 {
    if count < 6 {
        return 13;
    }
    let k = count as f64;
    let b = k * (math::ln(k) + math::ln(math::ln(k))) + 3.0;
    if b >= u32::MAX as f64 {
        u32::MAX
    } else {
        b as u32
    }
}

/// `Σ_{n ≤ n_max} d(n)|z(n)|²` with `z(n) = Π z_j^{α_j}` and `moduli[j] = |z_j|`.
///
/// Integers with a prime factor beyond `moduli.len()` are skipped.
pub fn divisor_weighted_sum(sieve: &Sieve, moduli: &[f64], n_max: u64) -> Result<f64> {
    let mut acc = math::Compensated::new();
    for n in 1..=n_max {
        let lift = sieve.bohr_lift(n)?;
        if lift.len() > moduli.len() {
            continue;
        }
        let mut w = lift.divisor_count() as f64;
        for (j, a) in lift.support() {
            let z2 = moduli[j] * moduli[j];
            for _ in 0..a {
                w *= z2;
            }
        }
        acc.add(w);
    }
    Ok(acc.value())
}

/// `Π_j (1/(1-|z_j|²))²`, the full sum of [`divisor_weighted_sum`] over all `n`.
pub fn divisor_weight_product(moduli: &[f64]) -> Result<f64> {
    let mut prod = 1.0;
    for &m in moduli {
        if !(0.0..1.0).contains(&m) {
            return Err(Error::param("|z_j|", m, "must lie in [0, 1)"));
        }
        let q = 1.0 / (1.0 - m * m);
        prod *= q * q;
    }
    Ok(prod)
}
