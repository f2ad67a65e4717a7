//! Direct summation of `F(h)`, `S(h)` and `F_μ(h)` with certified truncation brackets.
//!
//! The positive series are summed forward to an index `N` past the point
//! where the summand `x/(x²+h)^μ` starts decreasing (`x² ≥ h/(2μ−1)`), and the
//! remainder is bracketed by the integral test:
//!
//! ```text
//!   ∫_{N+1}^∞ g  ≤  Σ_{n>N} g(n)  ≤  ∫_N^∞ g,     ∫_a^∞ x/(x²+h)^μ dx = (a²+h)^{1−μ} / (2(μ−1))
//! ```
//!
//! The alternating series uses the classical remainder bound: once the
//! magnitudes decrease, the tail lies between zero and the first omitted term.
//!
//! Enclosures certify truncation; floating-point rounding is covered by an
//! additive slack of `16·ε·(|partial sum| + Σ|terms| + |tail|)`.

use std::fmt;

use crate::{CompensatedSum, Enclosure, Error, Result};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_TOL: f64 = 1e-2;
pub const DEFAULT_TERM_CAP: u64 = 100_000_000;

/// Multiplier on machine epsilon for the rounding slack.
const SLACK_ULPS: f64 = 16.0;

pub(crate) fn rounding_slack(magnitude: f64) -> f64 {
    SLACK_ULPS * f64::EPSILON * magnitude
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Integral,
    IntegralParts,
    Expansion,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Integral => "integral",
            Method::IntegralParts => "integral-parts",
            Method::Expansion => "expansion",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of any series or integral evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumResult {
    /// Midpoint of `enclosure`.
    pub value: f64,
    pub enclosure: Enclosure,
    /// Summation terms, or integrand panels for quadrature.
    pub terms_used: u64,
    pub method: Method,
}

impl SumResult {
    pub(crate) fn new(enclosure: Enclosure, terms_used: u64, method: Method) -> Self {
        Self {
            value: enclosure.midpoint(),
            enclosure,
            terms_used,
            method,
        }
    }

    pub fn half_width(&self) -> f64 {
        self.enclosure.half_width()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    pub h: f64,
    /// Exponent of the generalized series; only read by [`eval_generalized`].
    pub mu: f64,
    /// Requested half-width of the enclosure.
    pub tol: f64,
    pub term_cap: u64,
}

impl SeriesParams {
    pub fn new(h: f64, tol: f64) -> Self {
        Self {
            h,
            mu: 2.0,
            tol,
            term_cap: DEFAULT_TERM_CAP,
        }
    }

    pub fn with_mu(mut self, mu: f64) -> Self {
        self.mu = mu;
        self
    }

    pub fn with_term_cap(mut self, cap: u64) -> Self {
        self.term_cap = cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.h.is_finite() && self.h >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "h",
                value: self.h,
                reason: "must be finite and nonnegative",
            });
        }
        if !(self.tol > 0.0 && self.tol <= MAX_TOL) {
            return Err(Error::InvalidParameter {
                name: "tol",
                value: self.tol,
                reason: "must lie in (0, 1e-2]",
            });
        }
        if !(self.mu.is_finite() && self.mu > 1.0) {
            return Err(Error::Domain(format!(
                "mu = {} must exceed 1 (the series diverges otherwise)",
                self.mu
            )));
        }
        Ok(())
    }
}

impl Default for SeriesParams {
    fn default() -> Self {
        Self::new(1.0, DEFAULT_TOL)
    }
}

/// Smallest index from which `x/(x²+h)^μ` is nonincreasing on `[N, ∞)`.
pub fn monotone_threshold(h: f64, mu: f64) -> u64 {
    let t = (h / (2.0 * mu - 1.0)).sqrt().ceil();
    (t as u64).max(1)
}

/// `n/(n²+h)^μ`, with the `μ = 2` case done without `powf`.
#[inline]
fn generalized_term(n: u64, h: f64, mu: f64) -> f64 {
    let x = n as f64;
    let d = x * x + h;
    if mu == 2.0 {
        x / (d * d)
    } else {
        x * d.powf(-mu)
    }
}

#[inline]
fn mathieu_term(n: u64, h: f64) -> f64 {
    let x = n as f64;
    let d = x * x + h;
    x / (d * d)
}

/// `∫_a^∞ x/(x²+h)^μ dx`.
fn tail_integral(a: f64, h: f64, mu: f64) -> f64 {
    let d = a * a + h;
    if mu == 2.0 {
        0.5 / d
    } else {
        d.powf(1.0 - mu) / (2.0 * (mu - 1.0))
    }
}

/// Width of the integral-test bracket at `N`, i.e. `∫_N^{N+1} g`, computed without cancellation.
fn bracket_width(n: u64, h: f64, mu: f64) -> f64 {
    let x = n as f64;
    let a = x * x + h;
    let b = (x + 1.0) * (x + 1.0) + h;
    if mu == 2.0 {
        (2.0 * x + 1.0) / (2.0 * a * b)
    } else {
        let rel = ((2.0 * x + 1.0) / a).ln_1p();
        -a.powf(1.0 - mu) * ((1.0 - mu) * rel).exp_m1() / (2.0 * (mu - 1.0))
    }
}

/// Integral-test bracket for `Σ_{n>N} n/(n²+h)^μ`.
pub fn tail_bracket(n: u64, params: &SeriesParams) -> Result<Enclosure> {
    let (h, mu) = (params.h, params.mu);
    if !(mu > 1.0) {
        return Err(Error::Domain(format!("mu = {mu} must exceed 1")));
    }
    let threshold = monotone_threshold(h, mu);
    if n < threshold {
        return Err(Error::Precondition(format!(
            "N = {n} is below the monotonicity threshold {threshold} for h = {h}, mu = {mu}"
        )));
    }
    let x = n as f64;
    Enclosure::new(tail_integral(x + 1.0, h, mu), tail_integral(x, h, mu))
}

/// Smallest `N ≥ start` with `width(N) ≤ target`, assuming `width` is nonincreasing.
fn smallest_index(start: u64, cap: u64, target: f64, tol: f64, width: impl Fn(u64) -> f64) -> Result<u64> {
    if width(start) <= target {
        return Ok(start);
    }
    let mut lo = start;
    let mut hi = start.max(1);
    loop {
        if hi >= cap {
            if width(cap) <= target {
                hi = cap;
                break;
            }
            return Err(Error::ToleranceUnreachable { tol, cap });
        }
        hi = hi.saturating_mul(2).min(cap);
        if width(hi) <= target {
            break;
        }
        lo = hi;
    }
    // width(lo) > target >= width(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if width(mid) <= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Partial sum to `N` plus the integral-test bracket, with rounding slack.
fn bracketed_sum(n: u64, params: &SeriesParams, mu: f64) -> Result<Enclosure> {
    let p = SeriesParams { mu, ..*params };
    let tail = tail_bracket(n, &p)?;
    let partial: CompensatedSum = (1..=n).map(|k| generalized_term(k, p.h, mu)).collect();
    let s = partial.value();
    let slack = rounding_slack(s.abs() + partial.magnitude() + tail.hi());
    Ok(Enclosure::new(s + tail.lo(), s + tail.hi())?.inflate(slack))
}

/// Enclosure of `F_μ(h)` from the partial sum through `n_terms` plus the tail bracket.
///
/// Increasing `n_terms` never widens the result.
pub fn partial_enclosure(params: &SeriesParams, n_terms: u64) -> Result<Enclosure> {
    params.validate()?;
    bracketed_sum(n_terms, params, params.mu)
}

fn eval_positive(params: &SeriesParams, mu: f64) -> Result<SumResult> {
    let h = params.h;
    let threshold = monotone_threshold(h, mu);
    let n = smallest_index(threshold, params.term_cap, params.tol, params.tol, |k| {
        bracket_width(k, h, mu)
    })?;
    let enclosure = bracketed_sum(n, params, mu)?;
    Ok(SumResult::new(enclosure, n, Method::Direct))
}

/// `F(h) = Σ n/(n²+h)²` by direct summation; `params.mu` is ignored.
pub fn eval_mathieu_direct(params: &SeriesParams) -> Result<SumResult> {
    let p = SeriesParams { mu: 2.0, ..*params };
    p.validate()?;
    eval_positive(&p, 2.0)
}

/// `F_μ(h) = Σ n/(n²+h)^μ` for `μ > 1`.
pub fn eval_generalized(params: &SeriesParams) -> Result<SumResult> {
    params.validate()?;
    eval_positive(params, params.mu)
}

/// `S(h) = Σ (−1)^{n−1} n/(n²+h)²`.
///
/// Terms before the monotonicity threshold are summed exactly; from there on
/// consecutive partial sums bracket the value.
pub fn eval_alternating(params: &SeriesParams) -> Result<SumResult> {
    let p = SeriesParams { mu: 2.0, ..*params };
    p.validate()?;
    let h = p.h;
    let start = monotone_threshold(h, 2.0);
    let n = smallest_index(start, p.term_cap, p.tol, p.tol, |k| mathieu_term(k + 1, h))?;

    let mut partial = CompensatedSum::new();
    for k in 1..=n {
        let t = mathieu_term(k, h);
        partial.add(if k % 2 == 1 { t } else { -t });
    }
    let s = partial.value();
    let next = mathieu_term(n + 1, h);
    // sign of the (N+1)-th term is (−1)^N
    let signed_next = if n % 2 == 0 { next } else { -next };
    let slack = rounding_slack(s.abs() + partial.magnitude() + next);
    let enclosure = Enclosure::hull(s, s + signed_next).inflate(slack);
    Ok(SumResult::new(enclosure, n + 1, Method::Direct))
}

/// Consecutive partial sums of `S(h)`; index `k` holds `Σ_{n≤k+1}`.
pub fn alternating_partial_sums(h: f64, count: usize) -> Vec<f64> {
    let mut acc = CompensatedSum::new();
    (1..=count as u64)
        .map(|k| {
            let t = mathieu_term(k, h);
            acc.add(if k % 2 == 1 { t } else { -t });
            acc.value()
        })
        .collect()
}
