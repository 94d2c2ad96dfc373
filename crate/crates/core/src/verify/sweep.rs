use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::bounds::{
    agievich_central, central_lower, central_ratio, central_upper, sasvari_pair, tightness_compare,
    Tightness,
};
use crate::exact::{central_binomial, next_central_binomial, ExactInteger};
use crate::exec::Execution;
use crate::real::{certainly_less, IntervalReal, PrecisionPolicy, Verdict};
use crate::{Error, Result};

const CHUNK: u64 = 128;
const MAX_PROBLEMS: usize = 50;
/// `n` values where the dominance check is also run through intervals.
const DOMINANCE_SPOT_CHECKS: [u64; 4] = [1, 10, 100, 1000];

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub max_n: u64,
    /// Truncation orders to check: odd orders against "below exact", even
    /// orders against "above exact".
    pub orders: Vec<u32>,
    pub policy: PrecisionPolicy,
    pub execution: Execution,
    pub timing: bool,
}

impl SweepConfig {
    pub fn new(max_n: u64, orders: Vec<u32>) -> Self {
        Self {
            max_n,
            orders,
            policy: PrecisionPolicy::default(),
            execution: Execution::default(),
            timing: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Proved,
    Failed,
    Undecided,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounts {
    pub proved: u64,
    pub failed: u64,
    pub undecided: u64,
}

impl CheckCounts {
    pub fn total(&self) -> u64 {
        self.proved + self.failed + self.undecided
    }

    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Proved => self.proved += 1,
            Outcome::Failed => self.failed += 1,
            Outcome::Undecided => self.undecided += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Problem {
    pub check: String,
    pub n: u64,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub min_n: u64,
    pub max_n: u64,
    pub orders: Vec<u32>,
    pub precision_initial: u32,
    pub precision_max: u32,
    pub checks: BTreeMap<String, CheckCounts>,
    pub totals: CheckCounts,
    /// Largest `log2(width / |value|)` over the certified bound enclosures.
    pub worst_relative_width_log2: Option<i64>,
    pub max_precision_used: u32,
    /// First few failed or undecided checks, ordered by `n`.
    pub problems: Vec<Problem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SweepReport {
    pub fn all_proved(&self) -> bool {
        self.totals.failed == 0 && self.totals.undecided == 0
    }

    pub fn check(&self, name: &str) -> CheckCounts {
        self.checks.get(name).copied().unwrap_or_default()
    }
}

struct Checked {
    name: String,
    outcome: Outcome,
    precision: u32,
    width_log2: Option<i64>,
}

/// Escalates precision until `f` gives a definite verdict. `Yes` proves the
/// check, `No` refutes it.
fn certify(
    name: String,
    policy: &PrecisionPolicy,
    f: impl Fn(u32) -> Result<(Verdict, Option<i64>)>,
) -> Result<Checked> {
    let mut last = (0, None);
    for p in policy.levels() {
        let (verdict, width) = f(p)?;
        last = (p, width);
        let outcome = match verdict {
            Verdict::Yes => Outcome::Proved,
            Verdict::No => Outcome::Failed,
            Verdict::Unknown => continue,
        };
        return Ok(Checked {
            name,
            outcome,
            precision: p,
            width_log2: width,
        });
    }
    Ok(Checked {
        name,
        outcome: Outcome::Undecided,
        precision: last.0,
        width_log2: last.1,
    })
}

pub fn truncation_check_name(order: u32) -> String {
    if order % 2 == 1 {
        format!("order_{order}_below_exact")
    } else {
        format!("order_{order}_above_exact")
    }
}

fn gap(n: u64, exact: &ExactInteger, order: u32, p: u32) -> Result<IntervalReal> {
    let ratio = central_ratio(n, exact, p)?;
    let bound = central_upper(n, order, p)?.exp_exponent(p)?;
    Ok((&bound - &ratio).abs())
}

fn checks_for_n(
    n: u64,
    exact: &ExactInteger,
    prev: Option<&ExactInteger>,
    cfg: &SweepConfig,
) -> Result<Vec<Checked>> {
    let policy = &cfg.policy;
    let mut out = Vec::new();
    for &order in &cfg.orders {
        out.push(certify(truncation_check_name(order), policy, |p| {
            let ex = IntervalReal::from_integer(exact, p);
            let (bound, verdict) = if order % 2 == 1 {
                let b = central_lower(n, order, p)?;
                let v = certainly_less(&b.value, &ex);
                (b, v)
            } else {
                let b = central_upper(n, order, p)?;
                let v = certainly_less(&ex, &b.value);
                (b, v)
            };
            Ok((verdict, bound.value.relative_width_log2()))
        })?);
    }

    let rational = tightness_compare(n)?;
    let rational_ok = rational.verdict == Tightness::SasvariTighter;
    out.push(Checked {
        name: "dominance_rational".into(),
        outcome: if rational_ok {
            Outcome::Proved
        } else {
            Outcome::Failed
        },
        precision: 0,
        width_log2: None,
    });
    if DOMINANCE_SPOT_CHECKS.contains(&n) {
        out.push(certify("dominance_interval".into(), policy, |p| {
            let us = sasvari_pair(n, p)?.1.value;
            let ua = agievich_central(n, p)?.value;
            let v = match (certainly_less(&us, &ua), rational_ok) {
                (Verdict::Yes, true) => Verdict::Yes,
                (Verdict::Unknown, _) => Verdict::Unknown,
                _ => Verdict::No,
            };
            Ok((v, us.relative_width_log2()))
        })?);
    }

    if n >= 2 && cfg.orders.contains(&2) && cfg.orders.contains(&4) {
        out.push(certify("order_improvement".into(), policy, |p| {
            let g4 = gap(n, exact, 4, p)?;
            let g2 = gap(n, exact, 2, p)?;
            Ok((certainly_less(&g4, &g2), None))
        })?);
    }
    if let (Some(prev), true) = (prev, cfg.orders.contains(&2)) {
        out.push(certify("gap_decreasing".into(), policy, |p| {
            let here = gap(n, exact, 2, p)?;
            let before = gap(n - 1, prev, 2, p)?;
            Ok((certainly_less(&here, &before), None))
        })?);
    }
    Ok(out)
}

fn run_chunk(start: u64, end: u64, cfg: &SweepConfig) -> Result<Vec<(u64, Vec<Checked>)>> {
    let mut exact = central_binomial(start);
    let mut prev = (start >= 2).then(|| central_binomial(start - 1));
    let mut out = Vec::with_capacity((end - start + 1) as usize);
    for n in start..=end {
        out.push((n, checks_for_n(n, &exact, prev.as_ref(), cfg)?));
        let next = next_central_binomial(&exact, n);
        prev = Some(std::mem::replace(&mut exact, next));
    }
    Ok(out)
}

/// Runs the certified checks for every `n` in `1..=max_n`.
///
/// The range is split into chunks that run independently; results are merged
/// in order of `n`, so the report does not depend on scheduling.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    if cfg.max_n == 0 {
        return Err(Error::ZeroN);
    }
    for &order in &cfg.orders {
        if order == 0 || order > crate::bounds::MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                order,
                max: crate::bounds::MAX_ORDER,
            });
        }
    }
    let started = Instant::now();
    let chunks: Vec<(u64, u64)> = (0..cfg.max_n.div_ceil(CHUNK))
        .map(|i| (i * CHUNK + 1, ((i + 1) * CHUNK).min(cfg.max_n)))
        .collect();
    let results = cfg
        .execution
        .map(chunks, |(a, b)| run_chunk(a, b, cfg));

    let mut checks: BTreeMap<String, CheckCounts> = BTreeMap::new();
    let mut totals = CheckCounts::default();
    let mut worst = None;
    let mut max_prec = 0;
    let mut problems = Vec::new();
    for chunk in results {
        for (n, list) in chunk? {
            for c in list {
                checks.entry(c.name.clone()).or_default().record(c.outcome);
                totals.record(c.outcome);
                max_prec = max_prec.max(c.precision);
                if let Some(w) = c.width_log2 {
                    worst = Some(worst.map_or(w, |x: i64| x.max(w)));
                }
                if c.outcome != Outcome::Proved && problems.len() < MAX_PROBLEMS {
                    problems.push(Problem {
                        check: c.name,
                        n,
                        outcome: c.outcome,
                    });
                }
            }
        }
    }
    let orders = cfg.orders.clone();
    Ok(SweepReport {
        min_n: 1,
        max_n: cfg.max_n,
        orders,
        precision_initial: cfg.policy.initial(),
        precision_max: cfg.policy.maximum(),
        checks,
        totals,
        worst_relative_width_log2: worst,
        max_precision_used: max_prec,
        problems,
        wall_time_ms: cfg
            .timing
            .then(|| started.elapsed().as_millis() as u64),
    })
}
