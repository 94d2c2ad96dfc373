use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Direction for a rounded result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

/// `mantissa * 2^exponent`, kept canonical: the mantissa is odd, or zero with
/// exponent zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

fn floor_shift(m: &BigInt, s: u64) -> BigInt {
    if m.is_negative() {
        let mag = -m;
        let bias: BigInt = (BigInt::one() << s) - 1u32;
        -((mag + bias) >> s as usize)
    } else {
        m >> s
    }
}

fn ceil_shift(m: &BigInt, s: u64) -> BigInt {
    -floor_shift(&-m, s)
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        if mantissa.is_zero() {
            return Self::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        Self {
            mantissa: mantissa >> tz,
            exponent: exponent + tz as i64,
        }
    }

    pub fn zero() -> Self {
        Self {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_integer(BigInt::one())
    }

    pub fn from_integer(n: BigInt) -> Self {
        Self::new(n, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::new(BigInt::from(n), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Number of significant bits in the mantissa.
    pub fn mantissa_bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// `floor(log2 |self|)`, `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.mantissa.bits() as i64 - 1 + self.exponent)
        }
    }

    /// Multiply by `2^k` (exact).
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + k,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as u64;
        let b = &other.mantissa << (other.exponent - e) as u64;
        Self::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&-other)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.mantissa * &other.mantissa, self.exponent + other.exponent)
    }

    /// Round to at most `prec` significant bits in the given direction.
    pub fn round(&self, prec: u32, dir: Rounding) -> Self {
        let bits = self.mantissa.bits();
        if bits <= u64::from(prec) {
            return self.clone();
        }
        let shift = bits - u64::from(prec);
        let m = match dir {
            Rounding::Down => floor_shift(&self.mantissa, shift),
            Rounding::Up => ceil_shift(&self.mantissa, shift),
        };
        Self::new(m, self.exponent + shift as i64)
    }

    /// Directed quotient with `prec` significant bits. `other` must be nonzero.
    pub fn div(&self, other: &Self, prec: u32, dir: Rounding) -> Self {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let negative = self.is_negative() != other.is_negative();
        let num = self.mantissa.abs();
        let den = other.mantissa.abs();
        let shift = (i64::from(prec) + 2 + den.bits() as i64 - num.bits() as i64).max(0) as u64;
        let (q, r) = (num << shift).div_rem(&den);
        let inexact = !r.is_zero();
        let exponent = self.exponent - other.exponent - shift as i64;
        // Truncated magnitude q; bump away from zero when the direction asks for it.
        let bump = inexact
            && match dir {
                Rounding::Up => !negative,
                Rounding::Down => negative,
            };
        let mag = if bump { q + 1u32 } else { q };
        let m = if negative { -mag } else { mag };
        Self::new(m, exponent).round(prec, dir)
    }

    /// Directed square root with `prec` significant bits. Panics on negative input.
    pub fn sqrt(&self, prec: u32, dir: Rounding) -> Self {
        assert!(!self.is_negative(), "square root of a negative dyadic");
        if self.is_zero() {
            return Self::zero();
        }
        let want = 2 * u64::from(prec) + 2;
        let mut shift = want.saturating_sub(self.mantissa.bits());
        if (self.exponent - shift as i64).rem_euclid(2) == 1 {
            shift += 1;
        }
        let scaled = &self.mantissa << shift;
        let root = scaled.sqrt();
        let exact = &root * &root == scaled;
        let root = if !exact && dir == Rounding::Up {
            root + 1u32
        } else {
            root
        };
        Self::new(root, (self.exponent - shift as i64) / 2).round(prec, dir)
    }

    /// Directed conversion of a rational; exact when the denominator is a power of two.
    pub fn from_rational(q: &BigRational, prec: u32, dir: Rounding) -> Self {
        let den = q.denom();
        if (den & (den - 1u32)).is_zero() {
            let k = den.bits() as i64 - 1;
            return Self::new(q.numer().clone(), -k);
        }
        Self::from_integer(q.numer().clone()).div(&Self::from_integer(den.clone()), prec, dir)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << self.exponent as u64)
        } else {
            BigRational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as u64,
            )
        }
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        if self.exponent >= 0 {
            &self.mantissa << self.exponent as u64
        } else {
            floor_shift(&self.mantissa, (-self.exponent) as u64)
        }
    }

    /// Approximate `f64` value, for diagnostics only.
    pub fn to_f64_lossy(&self) -> f64 {
        let r = self.round(60, Rounding::Down);
        let m: f64 = r.mantissa.to_string().parse().unwrap_or(f64::NAN);
        m * 2f64.powi(r.exponent.clamp(-2000, 2000) as i32)
    }
}

impl std::ops::Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl std::ops::Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.mantissa.sign(), other.mantissa.sign());
        if sa != sb {
            let rank = |s: Sign| match s {
                Sign::Minus => 0,
                Sign::NoSign => 1,
                Sign::Plus => 2,
            };
            return rank(sa).cmp(&rank(sb));
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        // Same nonzero sign: compare magnitudes, cheaply when the scales differ.
        let (la, lb) = (self.log2_floor().unwrap(), other.log2_floor().unwrap());
        let mag = if la != lb {
            la.cmp(&lb)
        } else {
            let e = self.exponent.min(other.exponent);
            let a = self.mantissa.abs() << (self.exponent - e) as u64;
            let b = other.mantissa.abs() << (other.exponent - e) as u64;
            a.cmp(&b)
        };
        if sa == Sign::Minus {
            mag.reverse()
        } else {
            mag
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}
