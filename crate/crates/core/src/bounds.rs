//! Closed-form bounds on `F(h)` and their certification against direct-sum enclosures.
//!
//! | bound | statement | domain |
//! |-------|-----------|--------|
//! | [`BoundKind::HalfInverse`] | `F(h) < 1/(2h)` | `h > 0` |
//! | [`BoundKind::Lower`] | `F(h) > 1/(2h) − 1/(6h²)` | `h > 0` |
//! | [`BoundKind::Refined`] | `F(h) < 1/(1+h)² + 2/(4+h)² + 1/(2(4+h))` | `0 ≤ h < 2` |
//!
//! The doubled form `Σ 2n/(n²+h)² < 1/h` of the first bound is
//! [`conjecture_form`]. A bound *holds* only when the whole enclosure sits
//! strictly on the correct side.

use std::fmt;

use crate::series::{eval_mathieu_direct, SeriesParams};
use crate::{Enclosure, Error, Result};

/// Number of times `check_bound` divides the tolerance by ten on an undecided verdict.
pub const MAX_REFINEMENTS: u32 = 3;

fn require_positive(h: f64) -> Result<()> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::Domain(format!("bound needs h > 0, got {h}")));
    }
    Ok(())
}

/// `1/(2h)`.
pub fn upper_half_inverse(h: f64) -> Result<f64> {
    require_positive(h)?;
    Ok(0.5 / h)
}

/// `1/h`, the bound on `Σ 2n/(n²+h)²`.
pub fn conjecture_form(h: f64) -> Result<f64> {
    require_positive(h)?;
    Ok(1.0 / h)
}

/// `1/(2h) − 1/(6h²)`.
pub fn lower_bound(h: f64) -> Result<f64> {
    require_positive(h)?;
    Ok(0.5 / h - 1.0 / (6.0 * h * h))
}

/// `1/(1+h)² + 2/(4+h)² + 1/(2(4+h))` on `0 ≤ h < 2`.
pub fn schroder_refined(h: f64) -> Result<f64> {
    if !(h.is_finite() && (0.0..2.0).contains(&h)) {
        return Err(Error::Domain(format!(
            "refined bound is stated for 0 <= h < 2, got {h}"
        )));
    }
    let a = 1.0 + h;
    let b = 4.0 + h;
    Ok(1.0 / (a * a) + 2.0 / (b * b) + 0.5 / b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    HalfInverse,
    Lower,
    Refined,
}

impl BoundKind {
    pub fn relation(&self) -> Relation {
        match self {
            BoundKind::HalfInverse | BoundKind::Refined => Relation::StrictUpper,
            BoundKind::Lower => Relation::StrictLower,
        }
    }

    pub fn evaluate(&self, h: f64) -> Result<f64> {
        match self {
            BoundKind::HalfInverse => upper_half_inverse(h),
            BoundKind::Lower => lower_bound(h),
            BoundKind::Refined => schroder_refined(h),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundKind::HalfInverse => "half-inverse",
            BoundKind::Lower => "lower",
            BoundKind::Refined => "refined",
        }
    }
}

/// Which side of the bound `F(h)` is claimed to lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `F(h) < bound`
    StrictUpper,
    /// `F(h) > bound`
    StrictLower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundStatus {
    Holds,
    Fails,
    Undecided,
}

impl fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundStatus::Holds => "holds",
            BoundStatus::Fails => "fails",
            BoundStatus::Undecided => "undecided",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub h: f64,
    pub kind: BoundKind,
    pub bound_value: f64,
    pub series_enclosure: Enclosure,
    pub relation: Relation,
    pub status: BoundStatus,
    /// Tolerance of the final direct evaluation.
    pub tol_used: f64,
}

impl BoundCheck {
    /// Distance from the enclosure to the bound on the claimed side (negative if not strictly separated).
    pub fn margin(&self) -> f64 {
        match self.relation {
            Relation::StrictUpper => self.bound_value - self.series_enclosure.hi(),
            Relation::StrictLower => self.series_enclosure.lo() - self.bound_value,
        }
    }
}

pub fn classify(enclosure: &Enclosure, bound: f64, relation: Relation) -> BoundStatus {
    match relation {
        Relation::StrictUpper if enclosure.is_below(bound) => BoundStatus::Holds,
        Relation::StrictUpper if enclosure.lo() >= bound => BoundStatus::Fails,
        Relation::StrictLower if enclosure.is_above(bound) => BoundStatus::Holds,
        Relation::StrictLower if enclosure.hi() <= bound => BoundStatus::Fails,
        _ => BoundStatus::Undecided,
    }
}

/// Certifies one bound at `h` against the direct-sum enclosure, refining the
/// tolerance up to [`MAX_REFINEMENTS`] times while undecided.
pub fn check_bound(h: f64, kind: BoundKind, tol: f64) -> Result<BoundCheck> {
    let bound_value = kind.evaluate(h)?;
    let relation = kind.relation();
    let mut tol_used = tol;
    let mut refinements = 0;
    loop {
        let r = eval_mathieu_direct(&SeriesParams::new(h, tol_used))?;
        let status = classify(&r.enclosure, bound_value, relation);
        if status != BoundStatus::Undecided || refinements == MAX_REFINEMENTS {
            return Ok(BoundCheck {
                h,
                kind,
                bound_value,
                series_enclosure: r.enclosure,
                relation,
                status,
                tol_used,
            });
        }
        refinements += 1;
        tol_used /= 10.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert_eq!(upper_half_inverse(1.0).unwrap(), 0.5);
        assert_eq!(upper_half_inverse(0.5).unwrap(), 1.0);
        assert_eq!(upper_half_inverse(100.0).unwrap(), 0.005);
        assert!((lower_bound(1.0).unwrap() - 1.0 / 3.0).abs() < 1e-16);
        assert!(lower_bound(1.0 / 3.0).unwrap().abs() < 1e-15);
        assert!((lower_bound(10.0).unwrap() - 0.048_333_333_333_333_334).abs() < 1e-16);
        assert_eq!(schroder_refined(0.0).unwrap(), 1.25);
        assert!((schroder_refined(1.0).unwrap() - 0.43).abs() < 1e-15);
        assert!(schroder_refined(1.999).unwrap().is_finite());
    }

    #[test]
    fn domain_errors() {
        assert!(upper_half_inverse(0.0).is_err());
        assert!(lower_bound(0.0).is_err());
        assert!(lower_bound(-1.0).is_err());
        assert!(schroder_refined(2.0).is_err());
        assert!(schroder_refined(-0.1).is_err());
    }

    #[test]
    fn checks_at_one() {
        for kind in [BoundKind::HalfInverse, BoundKind::Lower, BoundKind::Refined] {
            let c = check_bound(1.0, kind, 1e-10).unwrap();
            assert_eq!(c.status, BoundStatus::Holds, "{kind:?}");
            assert!(c.margin() > 0.0);
        }
    }

    #[test]
    fn refined_bound_at_zero_uses_limit() {
        let c = check_bound(0.0, BoundKind::Refined, 1e-10).unwrap();
        assert_eq!(c.status, BoundStatus::Holds);
        assert!(c.series_enclosure.contains(1.202_056_903_159_594_3));
    }

    #[test]
    fn refinement_resolves_tight_gap() {
        // gap to either bound is about 1/(12 h²) ≈ 8.3e-10 at h = 1e4
        let c = check_bound(1e4, BoundKind::Lower, 1e-8).unwrap();
        assert_eq!(c.status, BoundStatus::Holds);
        assert!(c.tol_used < 1e-8);
    }

    #[test]
    fn classification() {
        let e = Enclosure::new(1.0, 2.0).unwrap();
        assert_eq!(classify(&e, 3.0, Relation::StrictUpper), BoundStatus::Holds);
        assert_eq!(classify(&e, 0.5, Relation::StrictUpper), BoundStatus::Fails);
        assert_eq!(classify(&e, 1.5, Relation::StrictUpper), BoundStatus::Undecided);
        assert_eq!(classify(&e, 0.5, Relation::StrictLower), BoundStatus::Holds);
        assert_eq!(classify(&e, 2.0, Relation::StrictLower), BoundStatus::Fails);
        assert_eq!(classify(&e, 1.5, Relation::StrictLower), BoundStatus::Undecided);
    }

    #[test]
    fn gap_identity() {
        for &h in &[0.01, 0.3, 1.0, 7.0, 1e3] {
            let gap = upper_half_inverse(h).unwrap() - lower_bound(h).unwrap();
            let expected = 1.0 / (6.0 * h * h);
            assert!((gap - expected).abs() <= 4.0 * f64::EPSILON * (0.5 / h), "h={h}");
            assert_eq!(conjecture_form(h).unwrap(), 2.0 * upper_half_inverse(h).unwrap());
        }
    }
}
