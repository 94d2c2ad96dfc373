//! Certified real arithmetic on intervals with dyadic endpoints.

mod dyadic;
mod exp;
mod interval;
mod pi;
mod policy;
mod render;

pub use dyadic::{Dyadic, Rounding};
pub use interval::{certainly_less, IntervalReal, Verdict};
pub use pi::{arctan_recip, pi};
pub use policy::PrecisionPolicy;
pub use render::{decimal_to_rational, last_place_unit, render_significant, round_significant};
