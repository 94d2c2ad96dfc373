//! Independent reference computations in exact rational arithmetic.
//!
//! Nothing here calls into the library: every value is an enclosure `(lo, hi)`
//! of rationals built from elementary series with explicit tail bounds, slow
//! but easy to audit. Used by the integration tests and the acceptance suite.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}

/// `atan(1/x)` enclosure from the alternating Taylor series, `terms` terms.
pub fn atan_recip(x: i64, terms: u32) -> (Q, Q) {
    let x2 = BigInt::from(x * x);
    let mut power = BigInt::from(x); // x^(2k+1)
    let mut sum = Q::zero();
    for k in 0..terms {
        let term = Q::new(BigInt::one(), &power * BigInt::from(2 * k + 1));
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x2;
    }
    // Next term decides the other side of the bracket.
    let next = Q::new(BigInt::one(), &power * BigInt::from(2 * terms + 1));
    let other = if terms.is_multiple_of(2) { &sum + &next } else { &sum - &next };
    if other < sum {
        (other, sum)
    } else {
        (sum, other)
    }
}

/// pi from Euler's `pi/4 = atan(1/2) + atan(1/3)`.
pub fn pi(terms: u32) -> (Q, Q) {
    let (a_lo, a_hi) = atan_recip(2, terms);
    let (b_lo, b_hi) = atan_recip(3, terms);
    let four = q(4, 1);
    ((a_lo + b_lo) * &four, (a_hi + b_hi) * four)
}

/// `exp(x)` enclosure for `|x| <= 1/2` by Taylor sum plus a geometric tail
/// bound: for `N >= 1`, `sum_{i>=N} |x|^i/i! <= 2 |x|^N / N!`.
fn exp_small(x: &Q, terms: u32) -> (Q, Q) {
    assert!(x.abs() <= q(1, 2));
    let mut term = Q::one();
    let mut sum = Q::zero();
    for i in 0..terms {
        sum += &term;
        term = term * x / q(i as i64 + 1, 1);
    }
    let tail = term.abs() * q(2, 1);
    (&sum - &tail, sum + tail)
}

/// Directed rounding of a positive rational to about `bits` significant bits.
fn round_out(x: &Q, bits: u32, up: bool) -> Q {
    let mag = x.numer().bits() as i64 - x.denom().bits() as i64;
    let k = i64::from(bits) - mag;
    let scale = |v: Q, k: i64| {
        if k >= 0 {
            v * Q::from_integer(BigInt::one() << k as u64)
        } else {
            v / Q::from_integer(BigInt::one() << (-k) as u64)
        }
    };
    let scaled = scale(x.clone(), k);
    let m = if up { scaled.ceil() } else { scaled.floor() };
    scale(m, -k)
}

/// `exp(x)` for any rational, via `exp(x) = exp(x / 2^m)^(2^m)`. Squarings
/// round outward to `2 * terms` significant bits to keep the sizes bounded.
pub fn exp(x: &Q, terms: u32) -> (Q, Q) {
    let mut m = 0u32;
    let mut y = x.clone();
    while y.abs() > q(1, 2) {
        y /= q(2, 1);
        m += 1;
    }
    let (mut lo, mut hi) = exp_small(&y, terms);
    assert!(lo.is_positive(), "too few terms for a positive lower bound");
    for _ in 0..m {
        lo = round_out(&(&lo * &lo), 2 * terms, false);
        hi = round_out(&(&hi * &hi), 2 * terms, true);
    }
    (lo, hi)
}

/// `sqrt(x)` for `x >= 0`, bracketed between multiples of `2^-bits`.
pub fn sqrt(x: &Q, bits: u32) -> (Q, Q) {
    assert!(!x.is_negative());
    let scale = pow2(2 * bits);
    let scaled = x * Q::from_integer(scale);
    let floor = scaled.floor().to_integer();
    let root = floor.sqrt();
    let den = pow2(bits);
    let lo = Q::new(root.clone(), den.clone());
    let hi = if &root * &root == floor && scaled.is_integer() {
        lo.clone()
    } else {
        Q::new(root + 1u32, den)
    };
    (lo, hi)
}

/// Interval product of two positive enclosures.
pub fn mul_pos(a: &(Q, Q), b: &(Q, Q)) -> (Q, Q) {
    assert!(!a.0.is_negative() && !b.0.is_negative());
    (&a.0 * &b.0, &a.1 * &b.1)
}

/// Interval quotient of two positive enclosures.
pub fn div_pos(a: &(Q, Q), b: &(Q, Q)) -> (Q, Q) {
    assert!(!a.0.is_negative() && b.0.is_positive());
    (&a.0 / &b.1, &a.1 / &b.0)
}

/// Bernoulli numbers `B_0..=B_max` by the Akiyama–Tanigawa algorithm.
/// This variant yields `B_1 = +1/2`; even indices agree with every convention.
pub fn bernoulli_akiyama_tanigawa(max: usize) -> Vec<Q> {
    let mut a: Vec<Q> = Vec::with_capacity(max + 1);
    let mut out = Vec::with_capacity(max + 1);
    for m in 0..=max {
        a.push(q(1, m as i64 + 1));
        for j in (1..=m).rev() {
            let diff = &a[j - 1] - &a[j];
            a[j - 1] = diff * q(j as i64, 1);
        }
        out.push(a[0].clone());
    }
    out
}

fn round_half_even(x: &Q) -> BigInt {
    let (fl, rem) = x.numer().div_mod_floor(x.denom());
    let twice: BigInt = rem * 2u32;
    match twice.cmp(x.denom()) {
        std::cmp::Ordering::Greater => fl + 1u32,
        std::cmp::Ordering::Less => fl,
        std::cmp::Ordering::Equal if fl.is_odd() => fl + 1u32,
        std::cmp::Ordering::Equal => fl,
    }
}

fn pow10(e: i64) -> Q {
    let ten = BigInt::from(10);
    if e >= 0 {
        Q::from_integer(num_traits::pow(ten, e as usize))
    } else {
        Q::new(BigInt::one(), num_traits::pow(ten, (-e) as usize))
    }
}

/// Positive rational rounded half-to-even to `digits` significant digits, in
/// plain positional notation.
pub fn decimal(x: &Q, digits: u32) -> String {
    assert!(x.is_positive());
    let mut t = 0i64;
    while &pow10(t) > x {
        t -= 1;
    }
    while &pow10(t + 1) <= x {
        t += 1;
    }
    let d = i64::from(digits);
    let mut m = round_half_even(&(x * pow10(d - 1 - t)));
    if Q::from_integer(m.clone()) == pow10(d) {
        m /= 10;
        t += 1;
    }
    let s = m.to_string();
    if t >= d - 1 {
        format!("{s}{}", "0".repeat((t - (d - 1)) as usize))
    } else if t >= 0 {
        let (a, b) = s.split_at(t as usize + 1);
        format!("{a}.{b}")
    } else {
        format!("0.{}{s}", "0".repeat((-t - 1) as usize))
    }
}

/// Rendering of an enclosure when both ends agree.
pub fn decimal_enclosure(x: &(Q, Q), digits: u32) -> Option<String> {
    let (a, b) = (decimal(&x.0, digits), decimal(&x.1, digits));
    (a == b).then_some(a)
}

/// `4^n / sqrt(pi n) * exp(e)`, the common shape of the central bounds.
pub fn central_shape(n: u64, e: &Q, bits: u32) -> (Q, Q) {
    let p = pi(bits);
    let pn = (&p.0 * int(&BigInt::from(n)), &p.1 * int(&BigInt::from(n)));
    let root = (sqrt(&pn.0, bits).0, sqrt(&pn.1, bits).1);
    let four_n = Q::from_integer(BigInt::one() << (2 * n));
    let numer = mul_pos(&(four_n.clone(), four_n), &exp(e, bits / 2 + 8));
    div_pos(&numer, &root)
}
