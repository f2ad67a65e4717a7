//! Truncated formal power series with exact rational coefficients.
//!
//! A [`RationalSeries`] of order `K` knows the coefficients of `x⁰ … x^K`;
//! everything beyond `K` is unknown, not zero. Binary operations truncate to
//! the smaller order of their operands.
//!
//! Only the assemblies needed to expand the Bose kernel `x/(eˣ−1)` and the
//! numerator of its third derivative are provided: scaled exponentials,
//! ring operations, reciprocal of a unit series and differentiation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

/// Order used when callers have no reason to choose one.
pub const DEFAULT_ORDER: usize = 20;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // BigRational::to_f64 rounds correctly for the sizes used here
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<Rational>,
}

impl RationalSeries {
    /// Series with the given coefficients; order is `coeffs.len() − 1`.
    ///
    /// # Panics
    ///
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| integer(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    /// `e^{a x}`: coefficient `k` is `a^k / k!`.
    pub fn exp_scaled(a: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Rational::one();
        coeffs.push(c.clone());
        for k in 1..=order {
            c = c * a / integer(k as i64);
            coeffs.push(c.clone());
        }
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        Self::new((0..=k).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        Self::new((0..=k).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        let coeffs = (0..=k)
            .map(|n| {
                (0..=n).fold(Rational::zero(), |acc, i| {
                    acc + &self.coeffs[i] * &other.coeffs[n - i]
                })
            })
            .collect();
        Self::new(coeffs)
    }

    /// Multiplies by `x^m`; the known order grows by `m`.
    pub fn shift(&self, m: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn recip_unit(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition(format!(
                "reciprocal needs constant coefficient 1, got {}",
                self.coeffs[0]
            )));
        }
        let k = self.order();
        let mut inv: Vec<Rational> = Vec::with_capacity(k + 1);
        inv.push(Rational::one());
        for n in 1..=k {
            let s = (1..=n).fold(Rational::zero(), |acc, i| acc + &self.coeffs[i] * &inv[n - i]);
            inv.push(-s);
        }
        Ok(Self::new(inv))
    }

    /// Term-by-term derivative; the order drops by one.
    pub fn derive(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::Precondition(
                "cannot differentiate a series of order 0".into(),
            ));
        }
        Ok(Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * integer(k as i64))
                .collect(),
        ))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    /// Evaluates the truncated polynomial in floating point (Horner).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rational_to_f64(c))
    }

    /// Index and value of the first nonzero coefficient.
    pub fn leading_term(&self) -> Option<(usize, &Rational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// Writes the series as `c·x^k·[1 + b₁x + b₂x² + …]`, returning `(k, c, [1, b₁, b₂, …])`.
    pub fn normalized(&self) -> Option<(usize, Rational, Vec<Rational>)> {
        let (k, c) = self.leading_term()?;
        let c = c.clone();
        let bracket = self.coeffs[k..].iter().map(|a| a / &c).collect();
        Some((k, c, bracket))
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Series of `(3−x)e^{2x} − 4x eˣ − x − 3`, the numerator of the third
/// derivative of the Bose kernel.
pub fn fsecond_numerator_series(order: usize) -> Result<RationalSeries> {
    if order < 5 {
        return Err(Error::Precondition(format!(
            "numerator series needs order >= 5, got {order}"
        )));
    }
    let e2 = RationalSeries::exp_scaled(&integer(2), order);
    let e1 = RationalSeries::exp_scaled(&integer(1), order);
    let three_minus_x = RationalSeries::from_integers(&[3, -1]);
    let mut three_minus_x_full = RationalSeries::zero(order);
    three_minus_x_full.coeffs[..2].clone_from_slice(three_minus_x.coeffs());

    let a = three_minus_x_full.mul(&e2);
    let b = e1.shift(1).truncate(order).scale(&integer(4));
    let mut linear = RationalSeries::zero(order);
    linear.coeffs[0] = integer(3);
    linear.coeffs[1] = integer(1);
    Ok(a.sub(&b).sub(&linear))
}

/// Series of the Bose kernel `x/(eˣ−1)`, i.e. `Bₖ/k!`.
pub fn bose_series(order: usize) -> RationalSeries {
    // (eˣ − 1)/x has coefficients 1/(k+1)!
    let e = RationalSeries::exp_scaled(&Rational::one(), order + 1);
    let quotient = RationalSeries::new(e.coeffs()[1..].to_vec());
    quotient
        .recip_unit()
        .expect("(e^x - 1)/x has constant term 1")
}

/// `lim_{x→0⁺} f′(x)` where `f` is the derivative of the Bose kernel; exactly `1/6`.
pub fn fprime_limit_at_zero() -> Rational {
    let u2 = bose_series(4)
        .derive()
        .and_then(|s| s.derive())
        .expect("order 4 supports two derivatives");
    u2.coeff(0).clone()
}

/// Exact sign summary of a coefficient list: `true` if every coefficient from
/// `from` onward is strictly negative.
pub fn all_negative_from(series: &RationalSeries, from: usize) -> bool {
    series.coeffs()[from..].iter().all(|c| c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        rational(n, d)
    }

    fn series(c: &[(i64, i64)]) -> RationalSeries {
        RationalSeries::new(c.iter().map(|&(n, d)| r(n, d)).collect())
    }

    #[test]
    fn exp_scaled_examples() {
        assert_eq!(
            RationalSeries::exp_scaled(&integer(0), 4),
            RationalSeries::from_integers(&[1, 0, 0, 0, 0])
        );
        assert_eq!(
            RationalSeries::exp_scaled(&integer(1), 3),
            series(&[(1, 1), (1, 1), (1, 2), (1, 6)])
        );
        assert_eq!(
            RationalSeries::exp_scaled(&integer(2), 5),
            series(&[(1, 1), (2, 1), (2, 1), (4, 3), (2, 3), (4, 15)])
        );
    }

    #[test]
    fn ring_operation_examples() {
        let a = RationalSeries::from_integers(&[1, 1, 0]);
        let b = RationalSeries::from_integers(&[1, -1, 0]);
        assert_eq!(a.mul(&b), RationalSeries::from_integers(&[1, 0, -1]));
        assert_eq!(
            RationalSeries::from_integers(&[1, 2]).scale(&integer(3)),
            RationalSeries::from_integers(&[3, 6])
        );
        assert_eq!(
            RationalSeries::from_integers(&[1, 1]).shift(1),
            RationalSeries::from_integers(&[0, 1, 1])
        );
        // mixed orders truncate to the smaller
        let c = RationalSeries::from_integers(&[1, 2, 3, 4]);
        assert_eq!(c.add(&a).order(), 2);
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            RationalSeries::from_integers(&[1, 1, 0]).recip_unit().unwrap(),
            RationalSeries::from_integers(&[1, -1, 1])
        );
        let q = series(&[(1, 1), (1, 2), (1, 6), (1, 24)]);
        assert_eq!(
            q.recip_unit().unwrap(),
            series(&[(1, 1), (-1, 2), (1, 12), (0, 1)])
        );
        let id = RationalSeries::from_integers(&[1, 0, 0]);
        assert_eq!(id.recip_unit().unwrap(), id);
        assert!(RationalSeries::from_integers(&[2, 1]).recip_unit().is_err());
        assert!(RationalSeries::from_integers(&[0, 1]).recip_unit().is_err());
    }

    #[test]
    fn derive_examples() {
        assert_eq!(
            RationalSeries::from_integers(&[0, 0, 1]).derive().unwrap(),
            RationalSeries::from_integers(&[0, 2])
        );
        let u = series(&[(1, 1), (-1, 2), (1, 12), (0, 1), (-1, 720)]);
        let u3 = u.derive().unwrap().derive().unwrap().derive().unwrap();
        assert_eq!(u3, series(&[(0, 1), (-1, 30)]));
        assert_eq!(
            RationalSeries::from_integers(&[5, 0, 0]).derive().unwrap(),
            RationalSeries::zero(1)
        );
        assert!(RationalSeries::from_integers(&[5]).derive().is_err());
    }

    #[test]
    fn numerator_series_exact() {
        let n = fsecond_numerator_series(8).unwrap();
        let expected = series(&[
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (-1, 30),
            (-1, 30),
            (-23, 1260),
            (-1, 140),
        ]);
        assert_eq!(n, expected);
        let n5 = fsecond_numerator_series(5).unwrap();
        assert!(n5.coeffs()[..5].iter().all(Zero::is_zero));
        assert!(fsecond_numerator_series(4).is_err());
    }

    #[test]
    fn numerator_normalized_bracket() {
        let n = fsecond_numerator_series(8).unwrap();
        let (k, c, bracket) = n.normalized().unwrap();
        assert_eq!(k, 5);
        assert_eq!(c, r(-1, 30));
        assert_eq!(bracket, vec![r(1, 1), r(1, 1), r(23, 42), r(3, 14)]);
    }

    #[test]
    fn numerator_negative_through_order_20() {
        let n = fsecond_numerator_series(DEFAULT_ORDER).unwrap();
        assert!(n.coeffs()[..5].iter().all(Zero::is_zero));
        assert!(all_negative_from(&n, 5));
    }

    #[test]
    fn numerator_matches_closed_form() {
        let closed = |x: f64| (3.0 - x) * (2.0 * x).exp() - 4.0 * x * x.exp() - x - 3.0;
        // truncation error ~ x^{K+1}; closed form cancellation ~ 10 eps
        let n = fsecond_numerator_series(DEFAULT_ORDER).unwrap();
        for &x in &[0.05, 0.1, 0.2] {
            let poly = n.eval_f64(x);
            let direct = closed(x);
            let cancellation = 20.0 * f64::EPSILON * 3.0 * (2.0 * x).exp();
            assert!((poly - direct).abs() <= cancellation, "x={x}: {poly} vs {direct}");
        }
        assert!((closed(0.1) - -3.6857e-7).abs() < 1e-10);
        assert!((n.eval_f64(0.1) - -3.685_657_665_315_535_7e-7).abs() < 1e-20);
    }

    #[test]
    fn bose_series_is_bernoulli() {
        let u = bose_series(6);
        assert_eq!(
            u,
            series(&[(1, 1), (-1, 2), (1, 12), (0, 1), (-1, 720), (0, 1), (1, 30240)])
        );
        assert!(u.coeff(3).is_zero());
        assert!(u.coeff(0).is_one());
        // re-multiplying by (e^x - 1)/x gives one
        let e = RationalSeries::exp_scaled(&Rational::one(), 7);
        let q = RationalSeries::new(e.coeffs()[1..].to_vec());
        assert_eq!(q.mul(&u), RationalSeries::one(6));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        let u = bose_series(30);
        for k in (3..=30).step_by(2) {
            assert!(u.coeff(k).is_zero(), "k={k}");
        }
    }

    #[test]
    fn derivative_chain_limits() {
        assert_eq!(fprime_limit_at_zero(), r(1, 6));
        let u1 = bose_series(6).derive().unwrap();
        assert_eq!(u1.coeff(0), &r(-1, 2));
        let u3 = u1.derive().unwrap().derive().unwrap();
        assert!(u3.coeff(0).is_zero());
        assert_eq!(u3.coeff(1), &r(-1, 30));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&r(-23, 1260)), "-23/1260");
        assert_eq!(format_rational(&r(0, 5)), "0");
        assert_eq!(format_rational(&r(4, 2)), "2");
    }

    fn small_series(order: usize) -> impl Strategy<Value = RationalSeries> {
        proptest::collection::vec((-9i64..10, 1i64..7), order + 1).prop_map(|v| {
            RationalSeries::new(v.into_iter().map(|(n, d)| rational(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_series(5), b in small_series(5), c in small_series(5)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        }

        #[test]
        fn reciprocal_is_two_sided(tail in small_series(6)) {
            let mut coeffs = tail.coeffs().to_vec();
            coeffs[0] = Rational::one();
            let s = RationalSeries::new(coeffs);
            let inv = s.recip_unit().unwrap();
            prop_assert_eq!(s.mul(&inv), RationalSeries::one(6));
            prop_assert_eq!(inv.mul(&s), RationalSeries::one(6));
        }

        #[test]
        fn derive_is_linear(a in small_series(4), b in small_series(4)) {
            prop_assert_eq!(a.add(&b).derive().unwrap(), a.derive().unwrap().add(&b.derive().unwrap()));
        }
    }
}
