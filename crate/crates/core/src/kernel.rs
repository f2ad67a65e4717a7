//! The Bose kernel `u(x) = x/(eˣ−1)` and its derivative chain.
//!
//! `f = u′`, `f′ = u″` and `f″ = u‴` are evaluated from closed forms for
//! `x ≥ SERIES_CUTOFF` and from the exact Bernoulli expansion below it. The
//! closed forms are rewritten in `q = e^{−x}` so they neither overflow for
//! large `x` nor divide infinities:
//!
//! ```text
//!   f(x)   = q (d − x) / d²                        d = 1 − e^{−x}
//!   f′(x)  = q (2x − (x+2) d) / d³
//!   f″(x)  = [(3−x) q − 4x q² − (x+3) q³] / d⁴
//! ```
//!
//! The last one is `eˣ·[(3−x)e^{2x} − 4x eˣ − x − 3]/(eˣ−1)⁴`. Near zero that
//! numerator cancels to `−x⁵/30`, so the series branch extends to `x = 1`,
//! where the Bernoulli series (radius `2π`) is still fast.
//!
//! The `*_as_printed` functions evaluate the published formulas verbatim so
//! that their disagreement with finite differences can be demonstrated.

use std::sync::OnceLock;

use crate::powser::{bose_series, RationalSeries};
use crate::{Error, Result};

/// Below this the derivative chain is evaluated from its Taylor series.
pub const SERIES_CUTOFF: f64 = 1.0;

/// Truncation order of the floating series branches.
const SERIES_ORDER: usize = 40;

struct ChainSeries {
    u: Vec<f64>,
    u1: Vec<f64>,
    u2: Vec<f64>,
    u3: Vec<f64>,
}

fn chain() -> &'static ChainSeries {
    static CHAIN: OnceLock<ChainSeries> = OnceLock::new();
    CHAIN.get_or_init(|| {
        let u = bose_series(SERIES_ORDER);
        let d = |s: &RationalSeries| s.derive().expect("order > 0");
        let u1 = d(&u);
        let u2 = d(&u1);
        let u3 = d(&u2);
        ChainSeries {
            u: u.to_f64_coeffs(),
            u1: u1.to_f64_coeffs(),
            u2: u2.to_f64_coeffs(),
            u3: u3.to_f64_coeffs(),
        }
    })
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// `x/(eˣ−1)`, with value 1 at the origin.
pub fn bose_kernel(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x < SERIES_CUTOFF {
        horner(&chain().u, x)
    } else {
        x / x.exp_m1()
    }
}

/// `x/(eˣ+1)`, the kernel of the alternating series.
pub fn fermi_kernel(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    let q = (-x).exp();
    x * q / (1.0 + q)
}

/// `f(x) = u′(x) = 1/(eˣ−1) − x eˣ/(eˣ−1)²`; `f(0) = −1/2`.
pub fn f_closed(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x < SERIES_CUTOFF {
        return horner(&chain().u1, x);
    }
    let q = (-x).exp();
    let d = -(-x).exp_m1();
    q * (d - x) / (d * d)
}

/// `f′(x) = 2x e^{2x}/(eˣ−1)³ − (x+2)eˣ/(eˣ−1)²`; `f′(0) = 1/6`.
pub fn fprime_closed(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x < SERIES_CUTOFF {
        return horner(&chain().u2, x);
    }
    let q = (-x).exp();
    let d = -(-x).exp_m1();
    q * (2.0 * x - (x + 2.0) * d) / (d * d * d)
}

/// `f″(x) = eˣ[(3−x)e^{2x} − 4x eˣ − x − 3]/(eˣ−1)⁴`; `f″(0) = 0`, negative for `x > 0`.
pub fn fsecond_closed(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x < SERIES_CUTOFF {
        return horner(&chain().u3, x);
    }
    let q = (-x).exp();
    let d = -(-x).exp_m1();
    let d2 = d * d;
    ((3.0 - x) * q - 4.0 * x * q * q - (x + 3.0) * q * q * q) / (d2 * d2)
}

/// Closed-form branch of `f`, `f′` or `f″` regardless of `x` (for continuity checks).
pub fn closed_branch(order: usize, x: f64) -> f64 {
    let q = (-x).exp();
    let d = -(-x).exp_m1();
    match order {
        0 => x / x.exp_m1(),
        1 => q * (d - x) / (d * d),
        2 => q * (2.0 * x - (x + 2.0) * d) / (d * d * d),
        3 => ((3.0 - x) * q - 4.0 * x * q * q - (x + 3.0) * q * q * q) / (d * d * d * d),
        _ => panic!("derivative order {order} not available"),
    }
}

/// Series branch of `u`, `f`, `f′` or `f″` regardless of `x`.
pub fn series_branch(order: usize, x: f64) -> f64 {
    let c = chain();
    match order {
        0 => horner(&c.u, x),
        1 => horner(&c.u1, x),
        2 => horner(&c.u2, x),
        3 => horner(&c.u3, x),
        _ => panic!("derivative order {order} not available"),
    }
}

/// Published form of `f′`: `2x eˣ/(eˣ−1)³ − (x eˣ + 2eˣ)/(eˣ−1)²`.
pub fn fprime_as_printed(x: f64) -> f64 {
    let e = x.exp();
    let m = x.exp_m1();
    2.0 * x * e / (m * m * m) - (x * e + 2.0 * e) / (m * m)
}

/// Published expanded form of `f″`:
/// `−6x e^{3x}/(eˣ−1)⁴ − (6x e^{2x} + 6e^{2x})/(eˣ−1)³ − (x eˣ + 3eˣ)/(eˣ−1)²`.
pub fn fsecond_as_printed_expanded(x: f64) -> f64 {
    let e = x.exp();
    let m = x.exp_m1();
    let m2 = m * m;
    -6.0 * x * e * e * e / (m2 * m2) - (6.0 * x * e * e + 6.0 * e * e) / (m2 * m) - (x * e + 3.0 * e) / m2
}

/// Published rational form of `f″`: `[(3−x)e^{2x} − 4x eˣ − x − 3]/(eˣ−1)⁴` (missing the `eˣ` factor).
pub fn fsecond_as_printed_rational(x: f64) -> f64 {
    let e = x.exp();
    let m = x.exp_m1();
    let m2 = m * m;
    ((3.0 - x) * e * e - 4.0 * x * e - x - 3.0) / (m2 * m2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivative {
    First,
    Second,
}

impl Derivative {
    fn order(self) -> f64 {
        match self {
            Derivative::First => 1.0,
            Derivative::Second => 2.0,
        }
    }
}

/// Central difference with one Richardson step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteDifference {
    pub value: f64,
    /// `|Richardson value − finer central difference|`, a practical error estimate.
    pub error_estimate: f64,
}

/// Central finite difference of order 1 or 2 at `x`, extrapolated over steps `h` and `h/2`.
pub fn finite_difference<F>(f: F, x: f64, order: Derivative, step: f64) -> Result<FiniteDifference>
where
    F: Fn(f64) -> f64,
{
    if !(step > 0.0) || x - order.order() * step <= 0.0 {
        return Err(Error::Precondition(format!(
            "finite difference needs step > 0 and x - order*step > 0 (x = {x}, step = {step})"
        )));
    }
    let central = |h: f64| match order {
        Derivative::First => (f(x + h) - f(x - h)) / (2.0 * h),
        Derivative::Second => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
    };
    let coarse = central(step);
    let fine = central(0.5 * step);
    let value = (4.0 * fine - coarse) / 3.0;
    Ok(FiniteDifference {
        value,
        error_estimate: (value - fine).abs(),
    })
}
