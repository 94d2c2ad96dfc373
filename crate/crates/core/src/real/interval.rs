use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dyadic::{Dyadic, Rounding};
use crate::{Error, Result};

/// Outcome of a certified comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Certified enclosure `[lo, hi]` of a real number.
///
/// Results of arithmetic are rounded outward to the working precision: the
/// larger of the operands' precisions, counted in significant bits of each
/// endpoint. Inputs built with [`IntervalReal::from_integer`] or from dyadic
/// rationals are kept exact regardless of precision.
#[derive(Clone, PartialEq, Eq)]
pub struct IntervalReal {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

fn check_prec(prec: u32) -> Result<()> {
    if prec < 2 {
        Err(Error::PrecisionTooLow(prec))
    } else {
        Ok(())
    }
}

impl IntervalReal {
    /// Panics if `lo > hi`.
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo:?} > {hi:?}");
        Self { lo, hi, prec }
    }

    pub fn point(x: Dyadic, prec: u32) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
            prec,
        }
    }

    /// Zero-width interval holding `n` exactly.
    pub fn from_integer(n: &BigInt, prec: u32) -> Self {
        Self::point(Dyadic::from_integer(n.clone()), prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::point(Dyadic::from_i64(n), prec)
    }

    /// Tightest `prec`-bit enclosure of `q`; zero width when `q` is dyadic.
    pub fn from_rational(q: &BigRational, prec: u32) -> Result<Self> {
        check_prec(prec)?;
        Ok(Self {
            lo: Dyadic::from_rational(q, prec, Rounding::Down),
            hi: Dyadic::from_rational(q, prec, Rounding::Up),
            prec,
        })
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    /// Larger endpoint magnitude.
    pub fn magnitude(&self) -> Dyadic {
        let (a, b) = (self.lo.abs(), self.hi.abs());
        if a > b {
            a
        } else {
            b
        }
    }

    /// Approximate `log2(width / magnitude)`; `None` for zero width.
    pub fn relative_width_log2(&self) -> Option<i64> {
        let w = self.width().log2_floor()?;
        let m = self.magnitude().log2_floor()?;
        Some(w - m + 1)
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        &self.lo.to_rational() <= q && q <= &self.hi.to_rational()
    }

    pub fn contains_dyadic(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// `other` lies entirely inside `self`.
    pub fn encloses(&self, other: &IntervalReal) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &IntervalReal) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Same enclosure re-labelled with a new working precision, rounded
    /// outward if the endpoints carry more bits.
    pub fn with_precision(&self, prec: u32) -> Self {
        Self {
            lo: self.lo.round(prec, Rounding::Down),
            hi: self.hi.round(prec, Rounding::Up),
            prec,
        }
    }

    fn outward(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        Self {
            lo: lo.round(prec, Rounding::Down),
            hi: hi.round(prec, Rounding::Up),
            prec,
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &IntervalReal) -> Self {
        Self {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            prec: self.prec.max(other.prec),
        }
    }

    /// Multiply by `2^k` (exact).
    pub fn mul_pow2(&self, k: i64) -> Self {
        Self {
            lo: self.lo.mul_pow2(k),
            hi: self.hi.mul_pow2(k),
            prec: self.prec,
        }
    }

    /// Enclosure of `|x|` over the interval.
    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            Self {
                lo: Dyadic::zero(),
                hi: self.magnitude(),
                prec: self.prec,
            }
        }
    }

    pub fn excludes_zero(&self) -> bool {
        self.lo.is_positive() || self.hi.is_negative()
    }

    pub fn div(&self, other: &IntervalReal) -> Result<Self> {
        if !other.excludes_zero() {
            return Err(Error::DivisionByZero);
        }
        let prec = self.prec.max(other.prec);
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| a.div(b, prec, Rounding::Down))
            .min()
            .unwrap();
        let hi = pairs
            .iter()
            .map(|(a, b)| a.div(b, prec, Rounding::Up))
            .max()
            .unwrap();
        Ok(Self { lo, hi, prec })
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        Ok(Self {
            lo: self.lo.sqrt(self.prec, Rounding::Down),
            hi: self.hi.sqrt(self.prec, Rounding::Up),
            prec: self.prec,
        })
    }

    /// `self^k` for `k >= 0` by repeated squaring. Requires `self >= 0`.
    pub(crate) fn powu_nonneg(&self, mut k: u64) -> Self {
        debug_assert!(!self.lo.is_negative());
        let mut base = self.clone();
        let mut acc = Self::from_i64(1, self.prec);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// Tri-state `a < b`: `Yes` iff `a.hi < b.lo`, `No` iff `b.hi < a.lo`.
pub fn certainly_less(a: &IntervalReal, b: &IntervalReal) -> Verdict {
    if a.hi < b.lo {
        Verdict::Yes
    } else if b.hi < a.lo {
        Verdict::No
    } else {
        Verdict::Unknown
    }
}

impl Add for &IntervalReal {
    type Output = IntervalReal;

    fn add(self, rhs: &IntervalReal) -> IntervalReal {
        IntervalReal::outward(
            self.lo.add(&rhs.lo),
            self.hi.add(&rhs.hi),
            self.prec.max(rhs.prec),
        )
    }
}

impl Sub for &IntervalReal {
    type Output = IntervalReal;

    fn sub(self, rhs: &IntervalReal) -> IntervalReal {
        IntervalReal::outward(
            self.lo.sub(&rhs.hi),
            self.hi.sub(&rhs.lo),
            self.prec.max(rhs.prec),
        )
    }
}

impl Mul for &IntervalReal {
    type Output = IntervalReal;

    fn mul(self, rhs: &IntervalReal) -> IntervalReal {
        let products = [
            self.lo.mul(&rhs.lo),
            self.lo.mul(&rhs.hi),
            self.hi.mul(&rhs.lo),
            self.hi.mul(&rhs.hi),
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        IntervalReal::outward(lo, hi, self.prec.max(rhs.prec))
    }
}

impl Neg for &IntervalReal {
    type Output = IntervalReal;

    fn neg(self) -> IntervalReal {
        IntervalReal {
            lo: -&self.hi,
            hi: -&self.lo,
            prec: self.prec,
        }
    }
}

impl fmt::Debug for IntervalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}, {:?}]@{} (~{:e})",
            self.lo,
            self.hi,
            self.prec,
            self.midpoint().to_f64_lossy()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: i64, hi: i64) -> IntervalReal {
        IntervalReal::new(Dyadic::from_i64(lo), Dyadic::from_i64(hi), 64)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn from_rational_examples() {
        let half = IntervalReal::from_rational(&q(1, 2), 3).unwrap();
        assert_eq!(half.width(), Dyadic::zero());
        assert!(half.contains_rational(&q(1, 2)));
        let third = IntervalReal::from_rational(&q(1, 3), 8).unwrap();
        assert!(third.contains_rational(&q(1, 3)));
        assert!(third.width() <= Dyadic::new(1.into(), -7));
        let eighth = IntervalReal::from_rational(&q(-1, 8), 2).unwrap();
        assert_eq!(eighth.lo(), &Dyadic::new((-1).into(), -3));
        assert_eq!(eighth.width(), Dyadic::zero());
        assert_eq!(
            IntervalReal::from_rational(&q(1, 3), 1),
            Err(Error::PrecisionTooLow(1))
        );
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&iv(1, 1) + &iv(2, 2), iv(3, 3));
        let p = &iv(1, 2) * &iv(-1, 1);
        assert!(p.encloses(&iv(-2, 2)));
        assert_eq!(&iv(5, 7) - &iv(1, 2), iv(3, 6));
        assert_eq!(-&iv(1, 2), iv(-2, -1));
    }

    #[test]
    fn division_by_zero_straddle_is_an_error() {
        let eps = Dyadic::new(1.into(), -40);
        let around_zero = IntervalReal::new(-&eps, eps, 64);
        assert_eq!(iv(1, 1).div(&around_zero), Err(Error::DivisionByZero));
        assert_eq!(iv(1, 1).div(&iv(0, 0)), Err(Error::DivisionByZero));
        let third = iv(1, 1).div(&iv(3, 3)).unwrap();
        assert!(third.contains_rational(&q(1, 3)));
        let neg = iv(1, 2).div(&iv(-4, -2)).unwrap();
        assert!(neg.encloses(&IntervalReal::from_rational(&q(-1, 1), 64).unwrap()));
        assert!(neg.contains_rational(&q(-1, 4)));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(iv(4, 4).sqrt().unwrap(), iv(2, 2));
        assert_eq!(iv(0, 0).sqrt().unwrap(), iv(0, 0));
        assert_eq!(iv(-1, 4).sqrt(), Err(Error::NegativeSqrt));
        let p = 53;
        let r2 = IntervalReal::from_i64(2, p).sqrt().unwrap();
        assert!(r2.width() <= Dyadic::new(1.into(), -(p as i64) + 2));
        let sq = &r2 * &r2;
        assert!(sq.contains_rational(&q(2, 1)));
    }

    #[test]
    fn certainly_less_examples() {
        assert_eq!(certainly_less(&iv(1, 2), &iv(3, 4)), Verdict::Yes);
        assert_eq!(certainly_less(&iv(1, 3), &iv(2, 4)), Verdict::Unknown);
        assert_eq!(certainly_less(&iv(5, 6), &iv(1, 2)), Verdict::No);
        assert_eq!(certainly_less(&iv(1, 2), &iv(2, 3)), Verdict::Unknown);
    }

    #[test]
    fn absolute_value() {
        assert_eq!(iv(-3, -1).abs(), iv(1, 3));
        assert_eq!(iv(-3, 2).abs(), iv(0, 3));
        assert_eq!(iv(1, 2).abs(), iv(1, 2));
    }

    #[test]
    fn power_by_squaring() {
        let three = iv(3, 3);
        assert_eq!(three.powu_nonneg(0), iv(1, 1));
        assert_eq!(three.powu_nonneg(5), iv(243, 243));
    }
}
