use std::fmt;
use std::ops::{Add, Neg};

use crate::{Error, Result};

/// Closed interval `[lo, hi]` guaranteed to contain a true value.
///
/// Arithmetic rounds outward by one ulp on each endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    lo: f64,
    hi: f64,
}

impl Enclosure {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::Precondition(format!(
                "enclosure endpoints out of order: [{lo:e}, {hi:e}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    /// Smallest interval containing both endpoints, in either order.
    pub fn hull(a: f64, b: f64) -> Self {
        debug_assert!(!a.is_nan() && !b.is_nan());
        Self {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn around(center: f64, half_width: f64) -> Self {
        let r = half_width.abs();
        Self {
            lo: (center - r).next_down(),
            hi: (center + r).next_up(),
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn half_width(&self) -> f64 {
        0.5 * self.width()
    }

    pub fn midpoint(&self) -> f64 {
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Gap between two disjoint intervals, zero when they overlap.
    pub fn separation(&self, other: &Enclosure) -> f64 {
        if self.hi < other.lo {
            other.lo - self.hi
        } else if other.hi < self.lo {
            self.lo - other.hi
        } else {
            0.0
        }
    }

    /// Entire interval strictly below `x`.
    pub fn is_below(&self, x: f64) -> bool {
        self.hi < x
    }

    /// Entire interval strictly above `x`.
    pub fn is_above(&self, x: f64) -> bool {
        self.lo > x
    }

    pub fn inflate(&self, r: f64) -> Self {
        let r = r.abs();
        Self {
            lo: (self.lo - r).next_down(),
            hi: (self.hi + r).next_up(),
        }
    }

    /// Multiplies by a scalar known exactly.
    pub fn scale(&self, k: f64) -> Self {
        let a = self.lo * k;
        let b = self.hi * k;
        Self {
            lo: a.min(b).next_down(),
            hi: a.max(b).next_up(),
        }
    }

    /// Smallest interval containing both.
    pub fn union(&self, other: &Enclosure) -> Self {
        Self {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }
}

impl Add for Enclosure {
    type Output = Enclosure;

    fn add(self, rhs: Enclosure) -> Enclosure {
        Enclosure {
            lo: (self.lo + rhs.lo).next_down(),
            hi: (self.hi + rhs.hi).next_up(),
        }
    }
}

impl Add<f64> for Enclosure {
    type Output = Enclosure;

    fn add(self, rhs: f64) -> Enclosure {
        self + Enclosure::point(rhs)
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;

    fn neg(self) -> Enclosure {
        Enclosure {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.16e}, {:.16e}]", self.lo, self.hi)
    }
}
