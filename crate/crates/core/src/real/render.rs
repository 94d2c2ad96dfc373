//! Decimal rendering to a fixed number of significant digits.
//!
//! Each endpoint is rounded half-to-even on its exact value; if both
//! endpoints give the same string then, rounding being monotone, so does every
//! point of the interval, and that string is returned. Otherwise the interval
//! is too wide and [`Error::NeedsMorePrecision`] is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dyadic::Dyadic;
use super::interval::IntervalReal;
use crate::{Error, Result};

pub fn render_significant(x: &IntervalReal, digits: u32) -> Result<String> {
    if digits == 0 {
        return Err(Error::ZeroDigits);
    }
    let lo = round_significant(x.lo(), digits);
    if x.lo() == x.hi() {
        return Ok(lo);
    }
    let hi = round_significant(x.hi(), digits);
    if lo == hi {
        Ok(lo)
    } else {
        Err(Error::NeedsMorePrecision { digits })
    }
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

fn pow10_rational(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(pow10(e as u32))
    } else {
        BigRational::new(BigInt::one(), pow10((-e) as u32))
    }
}

/// `floor(log10 a)` for positive rational `a`.
fn decimal_exponent(a: &BigRational, log2_floor: i64) -> i64 {
    // log10(2) ~ 0.30103; start from an estimate and correct exactly.
    let mut e = (log2_floor as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while &pow10_rational(e) > a {
        e -= 1;
    }
    while &pow10_rational(e + 1) <= a {
        e += 1;
    }
    e
}

fn round_half_even(x: &BigRational) -> BigInt {
    let (q, r): (BigInt, BigInt) = x.numer().div_mod_floor(x.denom());
    let twice = r * 2u32;
    match twice.cmp(x.denom()) {
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Equal => {
            if q.is_odd() {
                q + 1
            } else {
                q
            }
        }
    }
}

/// Exact value of `x` rounded half-to-even to `digits` significant digits.
pub fn round_significant(x: &Dyadic, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let value = x.to_rational();
    let a = value.abs();
    let mut e = decimal_exponent(&a, x.log2_floor().unwrap());
    let scaled = &a * pow10_rational(i64::from(digits) - 1 - e);
    let mut q = round_half_even(&scaled);
    if q == pow10(digits) {
        q /= 10;
        e += 1;
    }
    let ds = q.to_string();
    debug_assert_eq!(ds.len(), digits as usize);
    let body = if e >= i64::from(digits) - 1 {
        format!("{ds}{}", "0".repeat((e - i64::from(digits) + 1) as usize))
    } else if e >= 0 {
        let (int, frac) = ds.split_at(e as usize + 1);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{ds}", "0".repeat((-e - 1) as usize))
    };
    if value.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

/// Parses a plain decimal string (`-12.034`) into an exact rational.
pub fn decimal_to_rational(s: &str) -> Option<BigRational> {
    let (neg, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let v = BigRational::new(digits, pow10(frac.len() as u32));
    Some(if neg { -v } else { v })
}

/// One unit in the last printed digit of a rendered decimal.
pub fn last_place_unit(s: &str, digits: u32) -> Option<BigRational> {
    let v = decimal_to_rational(s)?.abs();
    if v.is_zero() {
        return None;
    }
    let lg = (v.numer().bits() as i64) - (v.denom().bits() as i64) - 1;
    let e = decimal_exponent(&v, lg);
    Some(pow10_rational(e - i64::from(digits) + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn exact(n: i64, d: i64) -> IntervalReal {
        IntervalReal::from_rational(&q(n, d), 64).unwrap()
    }

    #[test]
    fn layouts() {
        let p = IntervalReal::from_i64(184756, 64);
        assert_eq!(render_significant(&p, 10).unwrap(), "184756.0000");
        assert_eq!(render_significant(&p, 4).unwrap(), "184800");
        assert_eq!(render_significant(&exact(1, 8), 3).unwrap(), "0.125");
        assert_eq!(render_significant(&exact(-3, 1024), 2).unwrap(), "-0.0029");
        assert_eq!(render_significant(&exact(0, 1), 5).unwrap(), "0");
    }

    #[test]
    fn half_even_ties() {
        // 0.125 -> 0.12, 0.375 -> 0.38
        assert_eq!(render_significant(&exact(1, 8), 2).unwrap(), "0.12");
        assert_eq!(render_significant(&exact(3, 8), 2).unwrap(), "0.38");
        assert_eq!(render_significant(&exact(5, 2), 1).unwrap(), "2");
        assert_eq!(render_significant(&exact(15, 2), 1).unwrap(), "8");
    }

    #[test]
    fn carry_into_new_digit() {
        assert_eq!(render_significant(&exact(1023, 1024), 2).unwrap(), "1.0");
        assert_eq!(render_significant(&exact(1999, 2), 3).unwrap(), "1000");
    }

    #[test]
    fn wide_interval_needs_more_precision() {
        let x = IntervalReal::new(Dyadic::from_i64(1), Dyadic::from_i64(2), 64);
        assert_eq!(
            render_significant(&x, 3),
            Err(Error::NeedsMorePrecision { digits: 3 })
        );
        assert_eq!(render_significant(&x, 0), Err(Error::ZeroDigits));
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(decimal_to_rational("-12.5"), Some(q(-25, 2)));
        assert_eq!(decimal_to_rational("0.0029"), Some(q(29, 10000)));
        assert_eq!(decimal_to_rational("1e5"), None);
        assert_eq!(last_place_unit("14.000020428169", 14), Some(q(1, 1_000_000_000_000)));
        assert_eq!(last_place_unit("184800", 4), Some(q(100, 1)));
    }
}
