//! Reproducible discrepancies between printed formulas or values and their
//! recomputation. Every entry is produced by running the computation, not
//! copied from a fixed list of answers.

use num_rational::BigRational;
use serde::Serialize;

use super::golden::TABLE1;
use super::table::render_cell;
use crate::bounds::{agievich_central, central_upper, coefficient_from_definition, general_rs_truncated, GrowthFactor};
use crate::exact::{bernoulli_table, binomial};
use crate::real::{certainly_less, IntervalReal, PrecisionPolicy, Verdict};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Sign,
    DroppedDigit,
    Coefficient,
    Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrataEntry {
    pub location: String,
    pub printed_value: String,
    pub computed_value: String,
    pub classification: Classification,
    pub evidence: String,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn render(policy: &PrecisionPolicy, digits: u32, f: impl Fn(u32) -> Result<IntervalReal>) -> Result<String> {
    render_cell(policy, digits, f)?.ok_or(Error::NeedsMorePrecision { digits })
}

fn bernoulli_sign(_policy: &PrecisionPolicy) -> Result<ErrataEntry> {
    let b6 = bernoulli_table().lookup(6)?.clone();
    let printed = q(-1, 42);
    // Order-3 coefficient of the central exponent is -21 B_6 / 320.
    let coeff = |b: &BigRational| -(q(21, 320) * b);
    Ok(ErrataEntry {
        location: "bernoulli:B_6".into(),
        printed_value: printed.to_string(),
        computed_value: b6.to_string(),
        classification: Classification::Sign,
        evidence: format!(
            "recurrence gives B_6 = {b6}; the order-3 coefficient -21*B_6/320 is {} with the computed value \
             (matching the printed -1/640) but {} with the printed value",
            coeff(&b6),
            coeff(&printed)
        ),
    })
}

fn simplified_coefficient(_policy: &PrecisionPolicy) -> Result<ErrataEntry> {
    let table = bernoulli_table();
    let printed: Vec<String> = (1..=4u32)
        .map(|j| {
            let jj = i64::from(j);
            let b = table.lookup(2 * j).expect("cached");
            (b / (q(jj * (2 * jj - 1), 1) * q((1 << (2 * jj)) - 1, 1))).to_string()
        })
        .collect();
    let computed: Vec<String> = (1..=4).map(|j| coefficient_from_definition(j).to_string()).collect();
    Ok(ErrataEntry {
        location: "series:simplified D_2N(n,2) coefficient B_2j/(j(2j-1)) * 1/(2^2j-1)".into(),
        printed_value: printed.join(", "),
        computed_value: computed.join(", "),
        classification: Classification::Coefficient,
        evidence: format!(
            "for j = 1..4 the simplified coefficient gives [{}] while the defining sum gives [{}], \
             which is -B_2j(2^2j-1)/(j(2j-1)2^2j) and reproduces -1/(8n) + 1/(192n^3)",
            printed.join(", "),
            computed.join(", ")
        ),
    })
}

fn growth_factor(policy: &PrecisionPolicy) -> Result<ErrataEntry> {
    let (r, s) = (3u64, 5u64);
    let exact = binomial(r * s, s as i64);
    let digits = 10;
    let bound = |g: GrowthFactor, terms: u32| {
        move |p: u32| Ok(general_rs_truncated(r, s, terms, g, p)?.value)
    };
    let lit_lower = render(policy, digits, bound(GrowthFactor::PrintedLiteral, 1))?;
    let lit_upper = render(policy, digits, bound(GrowthFactor::PrintedLiteral, 2))?;
    let lower = render(policy, digits, bound(GrowthFactor::StirlingConsistent, 1))?;
    let upper = render(policy, digits, bound(GrowthFactor::StirlingConsistent, 2))?;
    let d = render(policy, digits, |p| {
        IntervalReal::from_rational(&q(27, 4), p)?.sqrt()
    })?;

    let p = policy.maximum();
    let ex = IntervalReal::from_integer(&exact, p);
    let lit_violates =
        certainly_less(&ex, &general_rs_truncated(r, s, 1, GrowthFactor::PrintedLiteral, p)?.value) == Verdict::Yes;
    let sandwiched = certainly_less(
        &general_rs_truncated(r, s, 1, GrowthFactor::StirlingConsistent, p)?.value,
        &ex,
    ) == Verdict::Yes
        && certainly_less(&ex, &general_rs_truncated(r, s, 2, GrowthFactor::StirlingConsistent, p)?.value)
            == Verdict::Yes;
    let printed_d = GrowthFactor::PrintedLiteral.power(r, 1);
    Ok(ErrataEntry {
        location: format!("general bound:d_r at r={r}"),
        printed_value: format!("d_3 = (r-1)/(1-1/r) = {}", isqrt_exact(&printed_d)),
        computed_value: format!("d_3 = sqrt(27/4) = {d}"),
        classification: Classification::Formula,
        evidence: format!(
            "C({},{}) = {exact}; with d_3^2 = 27/4 the order-1 lower bound {lower} and order-2 upper bound \
             {upper} {} it; with the printed d_3 = 3 the order-1 lower bound is {lit_lower}, which {} the \
             exact value (order-2 value {lit_upper}, off by (4/3)^s)",
            r * s,
            s,
            if sandwiched { "certainly enclose" } else { "do not certainly enclose" },
            if lit_violates { "certainly exceeds" } else { "does not certainly exceed" },
        ),
    })
}

/// `sqrt(d^2)` printed as an integer when exact.
fn isqrt_exact(d2: &BigRational) -> String {
    if d2.is_integer() {
        let root = d2.to_integer().sqrt();
        if &root * &root == d2.to_integer() {
            return root.to_string();
        }
    }
    format!("sqrt({d2})")
}

fn prefactor(policy: &PrecisionPolicy) -> Result<ErrataEntry> {
    let n = 10u64;
    let digits = 10;
    let exact = binomial(2 * n, n as i64);
    let with_4n = render(policy, digits, |p| Ok(central_upper(n, 2, p)?.value))?;
    // 2^n / sqrt(pi n) = (4^n / sqrt(pi n)) / 2^n, exactly.
    let with_2n = render(policy, digits, |p| Ok(central_upper(n, 2, p)?.value.mul_pow2(-(n as i64))))?;
    let p = policy.maximum();
    let below = certainly_less(
        &central_upper(n, 2, p)?.value.mul_pow2(-(n as i64)),
        &IntervalReal::from_integer(&exact, p),
    ) == Verdict::Yes;
    Ok(ErrataEntry {
        location: "central bound:prefactor".into(),
        printed_value: "2^n/sqrt(pi n)".into(),
        computed_value: "2^(2n)/sqrt(pi n)".into(),
        classification: Classification::Formula,
        evidence: format!(
            "at n = {n} with the order-2 exponent the 2^n prefactor gives {with_2n}, which {} C(20,10) = {exact}; \
             the 2^(2n) prefactor gives {with_4n}",
            if below { "is certainly below" } else { "is not certainly below" }
        ),
    })
}

fn dropped_digit(policy: &PrecisionPolicy) -> Result<ErrataEntry> {
    let (n, _, printed, _) = TABLE1[4];
    let computed = render(policy, 10, |p| Ok(agievich_central(n, p)?.value))?;
    let tail_matches = computed.get(1..) == Some(printed);
    Ok(ErrataEntry {
        location: format!("table1:n={n}:U_A"),
        printed_value: printed.into(),
        computed_value: computed.clone(),
        classification: Classification::DroppedDigit,
        evidence: format!(
            "4^{n}/sqrt({n} pi) * exp(23/{}) = {computed} to 10 significant digits; {}",
            36 * n,
            if tail_matches {
                "removing its leading digit gives the printed cell"
            } else {
                "the printed cell is not a truncation of it"
            }
        ),
    })
}

/// All known discrepancies, each with its reproducing computation.
pub fn errata_entries(policy: &PrecisionPolicy) -> Result<Vec<ErrataEntry>> {
    let makers: [fn(&PrecisionPolicy) -> Result<ErrataEntry>; 5] =
        [bernoulli_sign, simplified_coefficient, growth_factor, prefactor, dropped_digit];
    makers.iter().map(|f| f(policy)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_cover_all_classes() {
        let entries = errata_entries(&PrecisionPolicy::default()).unwrap();
        assert_eq!(entries.len(), 5);
        let b6 = &entries[0];
        assert_eq!((b6.printed_value.as_str(), b6.computed_value.as_str()), ("-1/42", "1/42"));
        assert!(b6.evidence.contains("-1/640"));
        assert!(entries[1].printed_value.starts_with("1/18"));
        assert!(entries[1].computed_value.starts_with("-1/8, 1/192, -1/640, 17/14336"));
        assert!(entries[2].evidence.contains("certainly exceeds"));
        assert!(entries[2].evidence.contains("certainly enclose"));
        assert_eq!(entries[2].printed_value, "d_3 = (r-1)/(1-1/r) = 3");
        assert!(entries[3].evidence.contains("is certainly below"));
        assert_eq!(entries[4].computed_value, "293.5845534");
        assert!(entries[4].evidence.contains("removing its leading digit"));
    }
}
