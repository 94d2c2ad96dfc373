//! Certified evaluation of upper and lower bounds on central binomial
//! coefficients and Catalan numbers.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact`]: exact integers, binomials, Catalan numbers and Bernoulli numbers.
//! - [`real`]: interval arithmetic over dyadic endpoints with outward rounding,
//!   plus certified `sqrt`, `exp` and `pi`.
//! - [`bounds`]: the Agievich and Sasvari bound families and the general
//!   `binom(rs, s)` bound, with exact rational exponents.
//! - [`verify`]: table reproduction, certified sweeps and the errata report
//!   used by the `centralbound` command-line tool.

pub mod bounds;
mod error;
pub mod exact;
pub mod exec;
pub mod real;
pub mod verify;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
