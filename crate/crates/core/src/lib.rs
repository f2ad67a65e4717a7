//! Certified numerics for Mathieu's series
//!
//! ```text
//!            ∞        n
//!   F(h) =   Σ   ───────────
//!           n=1   (n² + h)²
//! ```
//!
//! together with its alternating variant `S(h)` and the generalized exponent
//! variant `F_μ(h)`. Every evaluator returns a [`SumResult`] carrying an
//! [`Enclosure`] that contains the true value, so that inequalities can be
//! certified by comparing intervals instead of midpoints.
//!
//! The crate is organized as:
//!
//! * [`series`]: direct summation with integral-test and alternating tail brackets
//! * [`powser`]: exact rational truncated power series (Taylor coefficient oracle)
//! * [`kernel`]: the Bose kernel `x/(eˣ−1)`, its derivative chain and finite differences
//! * [`quad`]: semi-infinite panel quadrature and the two integral representations of `F`
//! * [`zeta`]: `ζ(s)`, `η(s)` and the power-series expansion of `F` and `S` about `h = 0`
//! * [`bounds`]: closed-form bounds and certified inequality checks

mod compensated;
mod enclosure;
mod error;

pub mod bounds;
pub mod kernel;
pub mod powser;
pub mod quad;
pub mod series;
pub mod zeta;

pub use compensated::CompensatedSum;
pub use enclosure::Enclosure;
pub use error::{Error, Result};
pub use series::{Method, SeriesParams, SumResult};
