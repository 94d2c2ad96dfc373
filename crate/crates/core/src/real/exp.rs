//! Certified `exp`.
//!
//! Argument reduction writes `x = k/2 + r` with `|r| <= 1/4`, so only a
//! cached enclosure of `exp(1/2)` is needed (no certified `ln 2`). The
//! reduced exponential is a Taylor sum evaluated in interval arithmetic with
//! the tail `|r|^(N+1) / (N+1)! * 1/(1 - |r|)` folded in as `[-T, T]`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::ToPrimitive;

use super::dyadic::{Dyadic, Rounding};
use super::interval::IntervalReal;
use crate::{Error, Result};

const GUARD_BITS: u32 = 24;
const MAX_HALF_STEPS: i64 = 1 << 40;

impl IntervalReal {
    /// Enclosure of `exp` over the whole interval (exp is increasing, so the
    /// endpoints suffice).
    pub fn exp(&self) -> Result<IntervalReal> {
        let lo = exp_point(self.lo(), self.precision())?;
        let hi = if self.lo() == self.hi() {
            lo.clone()
        } else {
            exp_point(self.hi(), self.precision())?
        };
        Ok(IntervalReal::new(lo.lo().clone(), hi.hi().clone(), self.precision())
            .with_precision(self.precision()))
    }
}

fn exp_point(x: &Dyadic, prec: u32) -> Result<IntervalReal> {
    if x.is_zero() {
        return Ok(IntervalReal::from_i64(1, prec));
    }
    // k = round(2x), r = x - k/2
    let k = x
        .mul_pow2(1)
        .add(&Dyadic::new(1.into(), -1))
        .floor()
        .to_i64()
        .filter(|k| k.abs() <= MAX_HALF_STEPS)
        .ok_or(Error::ExpArgumentTooLarge)?;
    let r = x.sub(&Dyadic::from_i64(k).mul_pow2(-1));
    let k_bits = 64 - k.unsigned_abs().leading_zeros();
    let w = prec + GUARD_BITS + 2 * k_bits;
    let reduced = taylor(&r, w);
    if k == 0 {
        return Ok(reduced);
    }
    let scale = exp_half(w).powu_nonneg(k.unsigned_abs());
    if k > 0 {
        Ok(&reduced * &scale)
    } else {
        reduced.div(&scale)
    }
}

/// `exp(r)` for `|r| <= 1/2` at working precision `w`.
fn taylor(r: &Dyadic, w: u32) -> IntervalReal {
    debug_assert!(r.abs() <= Dyadic::new(1.into(), -1));
    let rr = IntervalReal::point(r.clone(), w);
    let abs_r = r.abs();
    let mut term = IntervalReal::from_i64(1, w);
    let mut sum = term.clone();
    let target = -(i64::from(w)) - 4;
    let mut i: i64 = 1;
    loop {
        term = (&term * &rr)
            .div(&IntervalReal::from_i64(i, w))
            .expect("nonzero divisor");
        sum = &sum + &term;
        // |r|^(i+1)/(i+1)! <= |term| * |r| / (i+1), times 1/(1-|r|) <= 2.
        let tail = term
            .magnitude()
            .mul(&abs_r)
            .mul_pow2(1)
            .div(&Dyadic::from_i64(i + 1), w, Rounding::Up);
        if tail.is_zero() || tail.log2_floor().unwrap() < target {
            let band = IntervalReal::new(-&tail, tail, w);
            return &sum + &band;
        }
        i += 1;
    }
}

/// Enclosure of `exp(1/2)`, computed once per working precision and then
/// only read.
fn exp_half(w: u32) -> IntervalReal {
    static CACHE: OnceLock<Mutex<HashMap<u32, IntervalReal>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&w) {
        return v.clone();
    }
    let v = taylor(&Dyadic::new(1.into(), -1), w);
    cache.lock().unwrap().entry(w).or_insert(v).clone()
}
