use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Bernoulli index {0} is odd; only even indices are supported")]
    OddBernoulliIndex(u32),
    #[error("Bernoulli index {index} is beyond the precomputed range (max {max})")]
    BernoulliNotCached { index: u32, max: u32 },
    #[error("n must be at least 1 (the prefactor divides by sqrt(n))")]
    ZeroN,
    #[error("k = {k} is outside 0..={n}")]
    KOutOfRange { n: u64, k: i64 },
    #[error("series order {order} is out of range 1..={max}")]
    OrderOutOfRange { order: u32, max: u32 },
    #[error("series order {0} is odd; odd truncations are lower bounds (use the lower variant)")]
    OddOrderForUpper(u32),
    #[error("series order {0} is even; even truncations are upper bounds (use the upper variant)")]
    EvenOrderForLower(u32),
    #[error("r = {0} must be at least 2")]
    RadixTooSmall(u64),
    #[error("s must be at least 1")]
    ZeroS,
    #[error("division by an interval containing zero")]
    DivisionByZero,
    #[error("square root of an interval with negative lower endpoint")]
    NegativeSqrt,
    #[error("precision {0} bits is below the minimum of 2")]
    PrecisionTooLow(u32),
    #[error("invalid precision policy: {0}")]
    InvalidPolicy(String),
    #[error("interval too wide to determine {digits} significant digits; needs more precision")]
    NeedsMorePrecision { digits: u32 },
    #[error("digits must be at least 1")]
    ZeroDigits,
    #[error("exponent magnitude too large for argument reduction")]
    ExpArgumentTooLarge,
}
