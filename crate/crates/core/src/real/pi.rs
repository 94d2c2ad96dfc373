//! Certified `pi` from Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::dyadic::Dyadic;
use super::interval::IntervalReal;
use crate::Result;

const GUARD_BITS: u32 = 16;

/// Enclosure of `pi` of width at most `2^(-prec + 2)`.
///
/// The result is labelled with precision `prec + 2`: two extra endpoint bits
/// keep the width bound even when a `prec`-bit grid point falls inside the
/// enclosure.
pub fn pi(prec: u32) -> Result<IntervalReal> {
    if prec < 2 {
        return Err(crate::Error::PrecisionTooLow(prec));
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, IntervalReal>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&prec) {
        return Ok(v.clone());
    }
    let w = prec + GUARD_BITS;
    let a = arctan_recip(5, w).mul_pow2(4);
    let b = arctan_recip(239, w).mul_pow2(2);
    let v = (&a - &b).with_precision(prec + 2);
    Ok(cache.lock().unwrap().entry(prec).or_insert(v).clone())
}

/// `atan(1/x)` for integer `x >= 2` by its alternating series; the
/// truncation error has the sign of the first omitted term and is bounded
/// by its magnitude.
pub fn arctan_recip(x: u64, w: u32) -> IntervalReal {
    assert!(x >= 2);
    let x_iv = IntervalReal::from_integer(&x.into(), w);
    let x2 = &x_iv * &x_iv;
    let mut power = IntervalReal::from_i64(1, w).div(&x_iv).expect("x > 0");
    let mut sum = IntervalReal::from_i64(0, w);
    let target = -(i64::from(w)) - 4;
    let mut k: i64 = 0;
    loop {
        let term = power
            .div(&IntervalReal::from_i64(2 * k + 1, w))
            .expect("odd divisor");
        if k > 0 && term.hi().log2_floor().unwrap() < target {
            let bound = term.hi().clone();
            let tail = if k % 2 == 0 {
                IntervalReal::new(Dyadic::zero(), bound, w)
            } else {
                IntervalReal::new(-bound, Dyadic::zero(), w)
            };
            return &sum + &tail;
        }
        sum = if k % 2 == 0 { &sum + &term } else { &sum - &term };
        power = power.div(&x2).expect("x > 0");
        k += 1;
    }
}
