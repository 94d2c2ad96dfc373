//! Upper and lower bounds on `C(2n, n)`, Catalan numbers and `C(rs, s)`.
//!
//! Every bound has the shape `growth * exp(exponent) / sqrt(pi * q)` with
//! `growth`, `q` and `exponent` exact rationals. Intervals only enter at
//! `pi`, the square root and the final `exp`, so two bounds that share the
//! same three rationals produce identical enclosures.
//!
//! The central-binomial correction series is
//! `log C(2n, n) ~ log(4^n / sqrt(pi n)) + sum_j t_j / n^(2j-1)` with
//! `t_j = B_2j / (2j (2j-1)) * (2^(1-2j) - 2)`. Truncating after an even
//! number of terms gives an upper bound, after an odd number a lower bound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::{bernoulli_table, ExactInteger, ExactRational};
use crate::real::{pi, IntervalReal};
use crate::{Error, Result};

/// Largest series order accepted; the asymptotic series diverges for fixed
/// `n`, and `B_40` is the last precomputed Bernoulli number.
pub const MAX_ORDER: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundName {
    AgievichGeneral,
    AgievichShifted,
    AgievichCentral,
    AgievichCatalan,
    SasvariLower,
    SasvariUpper,
    CentralOrderN,
    CatalanOrderN,
    GeneralRS,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
}

impl BoundParams {
    fn n(n: u64) -> Self {
        Self {
            n: Some(n),
            ..Self::default()
        }
    }

    fn n_order(n: u64, order: u32) -> Self {
        Self {
            n: Some(n),
            order: Some(order),
            ..Self::default()
        }
    }
}

/// A named bound evaluation: `value` encloses the bound whose exponent is
/// exactly `exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub name: BoundName,
    pub params: BoundParams,
    pub exponent: ExactRational,
    pub value: IntervalReal,
}

impl BoundResult {
    /// `exp(exponent)`, the bound divided by its prefactor.
    pub fn exp_exponent(&self, prec: u32) -> Result<IntervalReal> {
        IntervalReal::from_rational(&self.exponent, prec)?.exp()
    }

    fn renamed(mut self, name: BoundName) -> Self {
        self.name = name;
        self
    }
}

/// The series coefficients `t_1..t_J` of the central exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCoefficients {
    terms: Vec<ExactRational>,
}

impl SeriesCoefficients {
    pub fn order(&self) -> u32 {
        self.terms.len() as u32
    }

    pub fn terms(&self) -> &[ExactRational] {
        &self.terms
    }

    /// `sum_j t_j / n^(2j-1)`.
    pub fn exponent_at(&self, n: u64) -> ExactRational {
        let n = BigRational::from_integer(n.into());
        let n2 = &n * &n;
        let mut power = n.clone();
        let mut sum = BigRational::zero();
        for t in &self.terms {
            sum += t / &power;
            power = &power * &n2;
        }
        sum
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tightness {
    SasvariTighter,
    AgievichTighter,
    Equal,
}

/// Exponent difference between the Agievich and Sasvari central bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightnessComparison {
    pub n: u64,
    pub f_value: ExactRational,
    pub verdict: Tightness,
}

fn q(n: i64, d: i64) -> ExactRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: u64) -> ExactRational {
    BigRational::from_integer(n.into())
}

fn pow2(k: u64) -> ExactRational {
    BigRational::from_integer(BigInt::one() << k)
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroN)
    } else {
        Ok(())
    }
}

fn check_order(order: u32) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        Err(Error::OrderOutOfRange {
            order,
            max: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

fn b2j(j: u32) -> &'static ExactRational {
    bernoulli_table()
        .lookup(2 * j)
        .expect("orders are capped at the precomputed table")
}

/// `growth * exp(exponent) / sqrt(pi * q)`.
fn scaled_value(
    growth: &ExactRational,
    q: &ExactRational,
    exponent: &ExactRational,
    prec: u32,
) -> Result<IntervalReal> {
    let growth = IntervalReal::from_rational(growth, prec)?;
    let e = IntervalReal::from_rational(exponent, prec)?.exp()?;
    let q = IntervalReal::from_rational(q, prec)?;
    let root = (&pi(prec)? * &q).sqrt()?;
    (&growth * &e).div(&root)
}

fn divide_by(value: &IntervalReal, d: u64) -> Result<IntervalReal> {
    value.div(&IntervalReal::from_integer(&d.into(), value.precision()))
}

/// `t_j` straight from the definition `B_2j / (2j (2j-1)) * (1/2^(2j-1) - 2)`.
pub fn coefficient_from_definition(j: u32) -> ExactRational {
    let jj = u64::from(j);
    let bracket = BigRational::one() / pow2(2 * jj - 1) - int(2);
    b2j(j) / int(2 * jj * (2 * jj - 1)) * bracket
}

/// `t_j` in the simplified form `-B_2j (2^2j - 1) / (j (2j-1) 2^2j)`.
pub fn coefficient_closed_form(j: u32) -> ExactRational {
    let jj = u64::from(j);
    let p = pow2(2 * jj);
    -(b2j(j) * (&p - BigRational::one())) / (int(jj * (2 * jj - 1)) * p)
}

/// Central exponent coefficients `t_1..t_order`; both derivations are checked
/// against each other.
pub fn central_exponent_coefficients(order: u32) -> Result<SeriesCoefficients> {
    check_order(order)?;
    let terms = (1..=order)
        .map(|j| {
            let t = coefficient_from_definition(j);
            assert_eq!(t, coefficient_closed_form(j), "coefficient t_{j} mismatch");
            t
        })
        .collect();
    Ok(SeriesCoefficients { terms })
}

/// `D_terms(s, r) = sum_j B_2j / (2j (2j-1)) * [1/(rs)^(2j-1) - 1/s^(2j-1) - 1/((r-1)s)^(2j-1)]`.
pub fn general_exponent(r: u64, s: u64, terms: u32) -> Result<ExactRational> {
    if r < 2 {
        return Err(Error::RadixTooSmall(r));
    }
    if s == 0 {
        return Err(Error::ZeroS);
    }
    check_order(terms)?;
    let (rs, s_, r1s) = (int(r * s), int(s), int((r - 1) * s));
    let mut sum = BigRational::zero();
    for j in 1..=terms {
        let e = 2 * j as i32 - 1;
        let jj = u64::from(j);
        let bracket =
            rs.pow(e).recip() - s_.pow(e).recip() - r1s.pow(e).recip();
        sum += b2j(j) / int(2 * jj * (2 * jj - 1)) * bracket;
    }
    Ok(sum)
}

/// Agievich's bound on `C(n, k)`: `2^n / sqrt(pi n / 2) * exp(-(2/n)(k - n/2)^2 + 23/(18n))`.
pub fn agievich_general(n: u64, k: i64, prec: u32) -> Result<BoundResult> {
    check_n(n)?;
    if k < 0 || k as u64 > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let offset = BigRational::from_integer(k.into()) - q(n as i64, 2);
    let exponent = -(int(2) / int(n)) * &offset * &offset + q(23, 18) / int(n);
    let value = scaled_value(&pow2(n), &q(n as i64, 2), &exponent, prec)?;
    Ok(BoundResult {
        name: BoundName::AgievichGeneral,
        params: BoundParams {
            n: Some(n),
            k: Some(k),
            ..BoundParams::default()
        },
        exponent,
        value,
    })
}

/// Agievich's bound on `C(2n, n + k)`: `4^n / sqrt(pi n) * exp(-k^2/n + 23/(36n))`.
pub fn agievich_shifted(n: u64, k: i64, prec: u32) -> Result<BoundResult> {
    check_n(n)?;
    let kk = BigRational::from_integer(k.into());
    let exponent = -(&kk * &kk) / int(n) + q(23, 36) / int(n);
    let value = scaled_value(&pow2(2 * n), &int(n), &exponent, prec)?;
    Ok(BoundResult {
        name: BoundName::AgievichShifted,
        params: BoundParams {
            n: Some(n),
            k: Some(k),
            ..BoundParams::default()
        },
        exponent,
        value,
    })
}

/// `U_A(n) = 4^n / sqrt(pi n) * exp(23/(36n))`.
pub fn agievich_central(n: u64, prec: u32) -> Result<BoundResult> {
    let mut b = agievich_shifted(n, 0, prec)?.renamed(BoundName::AgievichCentral);
    b.params = BoundParams::n(n);
    Ok(b)
}

/// `U_A(n) / (n + 1)`, an upper bound on the Catalan number `C_n`.
pub fn agievich_catalan(n: u64, prec: u32) -> Result<BoundResult> {
    let central = agievich_central(n, prec)?;
    Ok(BoundResult {
        name: BoundName::AgievichCatalan,
        value: divide_by(&central.value, n + 1)?,
        ..central
    })
}

fn central_truncated(n: u64, order: u32, prec: u32) -> Result<BoundResult> {
    check_n(n)?;
    let exponent = central_exponent_coefficients(order)?.exponent_at(n);
    let value = scaled_value(&pow2(2 * n), &int(n), &exponent, prec)?;
    Ok(BoundResult {
        name: BoundName::CentralOrderN,
        params: BoundParams::n_order(n, order),
        exponent,
        value,
    })
}

/// Even-order truncation: an upper bound on `C(2n, n)`.
pub fn central_upper(n: u64, order: u32, prec: u32) -> Result<BoundResult> {
    check_order(order)?;
    if order % 2 == 1 {
        return Err(Error::OddOrderForUpper(order));
    }
    central_truncated(n, order, prec)
}

/// Odd-order truncation: a lower bound on `C(2n, n)`.
pub fn central_lower(n: u64, order: u32, prec: u32) -> Result<BoundResult> {
    check_order(order)?;
    if order.is_multiple_of(2) {
        return Err(Error::EvenOrderForLower(order));
    }
    central_truncated(n, order, prec)
}

/// Sasvari's pair: exponents `-1/(8n)` and `-1/(8n) + 1/(192 n^3)`.
pub fn sasvari_pair(n: u64, prec: u32) -> Result<(BoundResult, BoundResult)> {
    let lower = central_lower(n, 1, prec)?.renamed(BoundName::SasvariLower);
    let upper = central_upper(n, 2, prec)?.renamed(BoundName::SasvariUpper);
    Ok((lower, upper))
}

/// Even-order upper bound on the Catalan number `C_n`.
pub fn catalan_upper(n: u64, order: u32, prec: u32) -> Result<BoundResult> {
    let central = central_upper(n, order, prec)?;
    Ok(BoundResult {
        name: BoundName::CatalanOrderN,
        value: divide_by(&central.value, n + 1)?,
        ..central
    })
}

/// Growth factor `d_r^2` used in the general bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthFactor {
    /// `d_r^2 = r^r / (r-1)^(r-1)`, the rate of `C(rs, s)^(1/s)`.
    StirlingConsistent,
    /// `d_r = (r-1) / (1 - 1/r)`, which simplifies to `r`.
    PrintedLiteral,
}

impl GrowthFactor {
    /// `d_r^(2s)` as an exact rational.
    pub fn power(self, r: u64, s: u64) -> ExactRational {
        match self {
            GrowthFactor::StirlingConsistent => {
                let num = BigInt::from(r).pow((r * s) as u32);
                let den = BigInt::from(r - 1).pow(((r - 1) * s) as u32);
                BigRational::new(num, den)
            }
            GrowthFactor::PrintedLiteral => {
                let d = (int(r) - BigRational::one()) / (BigRational::one() - int(r).recip());
                d.pow((2 * s) as i32)
            }
        }
    }
}

/// `c_r d_r^(2s) s^(-1/2) exp(D_terms(s, r))` with `c_r = 1/sqrt(2 pi (1 - 1/r))`.
///
/// Even `terms` give an upper bound on `C(rs, s)`, odd `terms` a lower bound
/// (with the Stirling-consistent growth factor).
pub fn general_rs_truncated(
    r: u64,
    s: u64,
    terms: u32,
    growth: GrowthFactor,
    prec: u32,
) -> Result<BoundResult> {
    let exponent = general_exponent(r, s, terms)?;
    // 2 pi (1 - 1/r) s = pi * (2 s (r-1) / r)
    let qf = BigRational::new((2 * s * (r - 1)).into(), r.into());
    let value = scaled_value(&growth.power(r, s), &qf, &exponent, prec)?;
    Ok(BoundResult {
        name: BoundName::GeneralRS,
        params: BoundParams {
            r: Some(r),
            s: Some(s),
            order: Some(terms),
            ..BoundParams::default()
        },
        exponent,
        value,
    })
}

/// Upper bound on `C(rs, s)` with exponent `D_2N(s, r)`.
pub fn general_rs_bound(r: u64, s: u64, pairs: u32, prec: u32) -> Result<BoundResult> {
    if r < 2 {
        return Err(Error::RadixTooSmall(r));
    }
    if pairs == 0 || 2 * pairs > MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            order: pairs,
            max: MAX_ORDER / 2,
        });
    }
    general_rs_truncated(r, s, 2 * pairs, GrowthFactor::StirlingConsistent, prec)
}

/// `C(2n, n) sqrt(pi n) / 4^n`, the quantity the central exponent approximates.
pub fn central_ratio(n: u64, exact: &ExactInteger, prec: u32) -> Result<IntervalReal> {
    check_n(n)?;
    let root = (&pi(prec)? * &IntervalReal::from_i64(n as i64, prec)).sqrt()?;
    Ok((&IntervalReal::from_integer(exact, prec) * &root).mul_pow2(-2 * n as i64))
}

/// `f(x) = 55/(72x) - 1/(192 x^3)`: the Agievich exponent `23/(36x)` minus the
/// Sasvari upper exponent.
pub fn tightness_f(x: &ExactRational) -> ExactRational {
    q(55, 72) / x - q(1, 192) / (x * x * x)
}

/// `f'(x) = -55/(72 x^2) + 1/(64 x^4)`.
pub fn tightness_f_derivative(x: &ExactRational) -> ExactRational {
    let x2 = x * x;
    -q(55, 72) / &x2 + q(1, 64) / (&x2 * &x2)
}

/// `f` is decreasing exactly where `x^2 > 9/440`.
pub fn tightness_critical_point_squared() -> ExactRational {
    q(9, 440)
}

/// Compares `U_A(n)` and `U_S(n)` by their exponents alone: the prefactors
/// agree and `exp` is increasing.
pub fn tightness_compare(n: u64) -> Result<TightnessComparison> {
    check_n(n)?;
    let f_value = tightness_f(&int(n));
    let verdict = if f_value.is_positive() {
        Tightness::SasvariTighter
    } else if f_value.is_negative() {
        Tightness::AgievichTighter
    } else {
        Tightness::Equal
    };
    Ok(TightnessComparison {
        n,
        f_value,
        verdict,
    })
}
