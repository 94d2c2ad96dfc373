//! Exact integer and rational building blocks.
//!
//! Everything here is computed without rounding: binomial coefficients by the
//! multiplicative formula with exact intermediate division, Catalan numbers
//! from the central binomial, and Bernoulli numbers from the recurrence
//! `sum_{k=0}^{m} C(m+1, k) B_k = 0` (which matches the generating function
//! `t / (e^t - 1)`, so `B_1 = -1/2`).
//!
//! # Concurrency
//!
//! [`BernoulliCache`] is a plain value that grows through `&mut self`.
//! Shared use goes through [`bernoulli_table`], which is precomputed once up
//! to [`BERNOULLI_TABLE_MAX`] and then frozen; it is never mutated after
//! initialization, so it is safe to read from any number of workers.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-size signed integer.
pub type ExactInteger = BigInt;

/// Reduced quotient of two [`ExactInteger`]s with a positive denominator.
pub type ExactRational = BigRational;

/// Highest even Bernoulli index held by the shared frozen table.
pub const BERNOULLI_TABLE_MAX: u32 = 40;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> ExactInteger {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // acc = C(n - k + i, i) after each step, so the division is exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> ExactInteger {
    binomial(2 * n, n as i64)
}

/// The n-th Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> ExactInteger {
    let c = central_binomial(n);
    debug_assert!((&c % (n + 1)).is_zero());
    c / (n + 1)
}

/// Advances `C(2n, n)` to `C(2n + 2, n + 1)`.
pub fn next_central_binomial(current: &ExactInteger, n: u64) -> ExactInteger {
    current * (2 * (2 * n + 1)) / (n + 1)
}

fn rat(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Even-index Bernoulli numbers computed on demand.
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    // even[j] = B_{2j}
    even: Vec<ExactRational>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self {
            even: vec![BigRational::one()],
        }
    }

    /// Cache already extended through `B_max_index`.
    pub fn with_max_index(max_index: u32) -> Result<Self> {
        let mut cache = Self::new();
        cache.get(max_index)?;
        Ok(cache)
    }

    /// Largest even index computed so far.
    pub fn high_water(&self) -> u32 {
        2 * (self.even.len() as u32 - 1)
    }

    /// `B_m`, extending the cache if needed.
    pub fn get(&mut self, m: u32) -> Result<&ExactRational> {
        check_even(m)?;
        while self.high_water() < m {
            let next = self.high_water() + 2;
            let value = self.recurrence(next);
            self.even.push(value);
        }
        Ok(&self.even[(m / 2) as usize])
    }

    /// `B_m` without extending; fails past the high-water mark.
    pub fn lookup(&self, m: u32) -> Result<&ExactRational> {
        check_even(m)?;
        self.even
            .get((m / 2) as usize)
            .ok_or(Error::BernoulliNotCached {
                index: m,
                max: self.high_water(),
            })
    }

    /// B_m from all lower entries: the k = 1 term uses B_1 = -1/2, odd k > 1 vanish.
    fn recurrence(&self, m: u32) -> ExactRational {
        let m1 = u64::from(m) + 1;
        let mut sum = BigRational::one() + rat(-1, 2) * BigRational::from_integer(m1.into());
        for k in (2..m).step_by(2) {
            let c = BigRational::from_integer(binomial(m1, i64::from(k)));
            sum += c * &self.even[(k / 2) as usize];
        }
        -sum / BigRational::from_integer(m1.into())
    }
}

fn check_even(m: u32) -> Result<()> {
    if m % 2 == 1 {
        Err(Error::OddBernoulliIndex(m))
    } else {
        Ok(())
    }
}

/// `B_m` for the generating-function convention. `B_1 = -1/2`; other odd
/// indices are rejected.
pub fn bernoulli(m: u32, cache: &mut BernoulliCache) -> Result<ExactRational> {
    if m == 1 {
        return Ok(rat(-1, 2));
    }
    cache.get(m).cloned()
}

/// Shared frozen table through `B_40`.
pub fn bernoulli_table() -> &'static BernoulliCache {
    static TABLE: OnceLock<BernoulliCache> = OnceLock::new();
    TABLE.get_or_init(|| {
        BernoulliCache::with_max_index(BERNOULLI_TABLE_MAX).expect("even index")
    })
}
