//! `ζ(s)` and `η(s)` at integer arguments, and the expansion of `F` and `S`
//! about `h = 0`.
//!
//! Expanding `sin(√h x)` in the integral representation and integrating term
//! by term with `∫₀^∞ x^{s−1}/(eˣ−1) dx = Γ(s) ζ(s)` gives
//!
//! ```text
//!   F(h) = Σ_{m≥1} (−1)^{m−1} m ζ(2m+1) h^{m−1}
//!   S(h) = Σ_{m≥1} (−1)^{m−1} m η(2m+1) h^{m−1}
//! ```
//!
//! Both converge for `0 ≤ h < 1`; the poles of `F` at `h = −n²` fix the radius.
//! The published coefficients `(−1)^{m+1} ζ(2m)/(2m−1)!` are exposed through
//! [`ExpansionCoeff`] for comparison only.

use crate::series::{rounding_slack, MAX_TOL};
use crate::{CompensatedSum, Enclosure, Error, Method, Result, SumResult};

/// Every [`ZetaValue`] enclosure is at most this wide.
pub const ZETA_MAX_WIDTH: f64 = 1e-12;
pub const ZETA_TERM_CAP: u64 = 100_000_000;
/// Highest expansion index tried before giving up.
pub const EXPANSION_TERM_CAP: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaValue {
    pub s: u32,
    pub enclosure: Enclosure,
}

impl ZetaValue {
    pub fn value(&self) -> f64 {
        self.enclosure.midpoint()
    }
}

/// `∫_a^∞ x^{−s} dx`.
fn power_tail(a: f64, s: u32) -> f64 {
    a.powf(1.0 - f64::from(s)) / (f64::from(s) - 1.0)
}

/// `ζ(s)` for integer `s ≥ 2` by direct summation plus the integral-test bracket.
pub fn zeta_int(s: u32, tol: f64) -> Result<ZetaValue> {
    if s < 2 {
        return Err(Error::Domain(format!("zeta_int needs s >= 2, got {s}")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            reason: "must be positive",
        });
    }
    let target = tol.min(0.5 * ZETA_MAX_WIDTH);
    let width = |n: u64| {
        let x = n as f64;
        power_tail(x, s) - power_tail(x + 1.0, s)
    };
    let mut n = 1u64;
    while width(n) > target {
        if n >= ZETA_TERM_CAP {
            return Err(Error::ToleranceUnreachable {
                tol,
                cap: ZETA_TERM_CAP,
            });
        }
        n = (n * 2).min(ZETA_TERM_CAP);
    }
    // binary search back down to the smallest sufficient N
    let (mut lo, mut hi) = (n / 2, n);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if width(mid) <= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let n = hi;

    // the leading 1 is kept out of the sum so the slack scales with ζ(s) − 1
    let exponent = -(s as i32);
    let rest: CompensatedSum = (2..=n).map(|k| (k as f64).powi(exponent)).collect();
    let sum = rest.value();
    let x = n as f64;
    let (t_lo, t_hi) = (power_tail(x + 1.0, s), power_tail(x, s));
    let slack = rounding_slack(sum.abs() + rest.magnitude() + t_hi);
    let tail = Enclosure::new(sum + t_lo, sum + t_hi)?.inflate(slack);
    let total = tail + 1.0;
    // ζ(s) > 1 exactly
    let enclosure = Enclosure::new(total.lo().max(1.0), total.hi())?;
    Ok(ZetaValue { s, enclosure })
}

/// `η(s) = (1 − 2^{1−s}) ζ(s)`.
pub fn eta_int(s: u32, tol: f64) -> Result<ZetaValue> {
    let z = zeta_int(s, tol)?;
    // 1 − 2^{1−s} is inexact once s > 53
    let factor = 1.0 - 2f64.powi(1 - s as i32);
    let enclosure = z.enclosure.scale(factor);
    Ok(ZetaValue {
        s,
        enclosure: enclosure.inflate(f64::EPSILON * enclosure.hi().abs()),
    })
}

/// Coefficient of `h^{m−1}` in the expansion of `F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionCoeff {
    pub m: u32,
    /// `(−1)^{m−1} m ζ(2m+1)`.
    pub corrected: f64,
    pub corrected_enclosure: Enclosure,
    /// Published form `(−1)^{m+1} ζ(2m)/(2m−1)!`.
    pub as_printed: f64,
    /// The published form halved, as implied by the `2F = ζ(2) − h ζ(4)/3! + …` line.
    pub as_printed_halved: f64,
}

fn sign(m: u32) -> f64 {
    if m % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

pub fn expansion_coeff(m: u32) -> Result<ExpansionCoeff> {
    if m == 0 {
        return Err(Error::Precondition("expansion index starts at 1".into()));
    }
    let z_odd = zeta_int(2 * m + 1, ZETA_MAX_WIDTH)?;
    let z_even = zeta_int(2 * m, ZETA_MAX_WIDTH)?;
    let mut enc = z_odd.enclosure.scale(f64::from(m));
    if m.is_multiple_of(2) {
        enc = -enc;
    }
    // ζ(2m)/(2m−1)!, dividing as we go so large m underflows instead of overflowing
    let printed = (1..2 * m).fold(z_even.value(), |acc, k| acc / f64::from(k));
    Ok(ExpansionCoeff {
        m,
        corrected: enc.midpoint(),
        corrected_enclosure: enc,
        as_printed: sign(m) * printed,
        as_printed_halved: 0.5 * sign(m) * printed,
    })
}

/// Partial sums of the published expansion, `Σ_{m≤terms} (−1)^{m+1} ζ(2m)/(2m−1)! h^{m−1}`.
pub fn eval_printed_expansion(h: f64, terms: u32) -> Result<f64> {
    let mut acc = CompensatedSum::new();
    let mut p = 1.0;
    for m in 1..=terms {
        acc.add(expansion_coeff(m)?.as_printed * p);
        p *= h;
    }
    Ok(acc.value())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Zeta,
    Eta,
}

fn expansion(h: f64, tol: f64, family: Family) -> Result<SumResult> {
    if !(h.is_finite() && (0.0..1.0).contains(&h)) {
        return Err(Error::Domain(format!(
            "the expansion about h = 0 converges only for 0 <= h < 1, got h = {h}"
        )));
    }
    if !(tol > 0.0 && tol <= MAX_TOL) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            reason: "must lie in (0, 1e-2]",
        });
    }
    let one_minus = 1.0 - h;
    let zeta_tol = (0.25 * tol * one_minus * one_minus).min(0.5 * ZETA_MAX_WIDTH);
    let coefficient = |m: u32| -> Result<Enclosure> {
        let z = match family {
            Family::Zeta => zeta_int(2 * m + 1, zeta_tol)?,
            Family::Eta => eta_int(2 * m + 1, zeta_tol)?,
        };
        Ok(z.enclosure.scale(f64::from(m)))
    };
    // b_{k+1}/b_k ≤ ((k+1)/k)·h·ρ_k, with ρ_k bounding the ratio of consecutive ζ/η values
    let ratio_bound = |k: u32| {
        let k = f64::from(k);
        let rho = match family {
            Family::Zeta => 1.0,
            Family::Eta => 1.0 / (1.0 - 4f64.powf(-k)),
        };
        (k + 1.0) / k * h * rho
    };

    let mut total = Enclosure::point(0.0);
    let mut power = 1.0; // h^{m−1}
    let mut m: u32 = 1;
    loop {
        let c = coefficient(m)?;
        let rel = 2.0 * f64::from(m) * f64::EPSILON;
        let mut term = c.scale(power);
        term = term.inflate(rel * term.hi().abs());
        total = total + if m % 2 == 1 { term } else { -term };

        if h == 0.0 {
            return Ok(SumResult::new(total, u64::from(m), Method::Expansion));
        }
        let next_power = power * h;
        if ratio_bound(m + 1) <= 1.0 {
            let next = coefficient(m + 1)?.hi() * next_power * (1.0 + rel);
            if next <= tol {
                let tail = if m.is_multiple_of(2) {
                    Enclosure::hull(0.0, next)
                } else {
                    Enclosure::hull(-next, 0.0)
                };
                return Ok(SumResult::new(total + tail, u64::from(m) + 1, Method::Expansion));
            }
        }
        if u64::from(m) >= EXPANSION_TERM_CAP {
            return Err(Error::ToleranceUnreachable {
                tol,
                cap: EXPANSION_TERM_CAP,
            });
        }
        power = next_power;
        m += 1;
    }
}

/// `F(h)` from `Σ (−1)^{m−1} m ζ(2m+1) h^{m−1}`, `0 ≤ h < 1`.
pub fn eval_expansion(h: f64, tol: f64) -> Result<SumResult> {
    expansion(h, tol, Family::Zeta)
}

/// `S(h)` from `Σ (−1)^{m−1} m η(2m+1) h^{m−1}`, `0 ≤ h < 1`.
pub fn eval_expansion_alternating(h: f64, tol: f64) -> Result<SumResult> {
    expansion(h, tol, Family::Eta)
}
