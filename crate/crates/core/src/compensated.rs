/// Neumaier's variant of Kahan summation.
///
/// Also tracks `Σ|xᵢ|`, which the series evaluators use to size their
/// rounding slack.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
    magnitude: f64,
    count: u64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
        self.magnitude += x.abs();
        self.count += 1;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }

    /// `Σ|xᵢ|` over everything added so far (plain summation).
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        s.extend(iter);
        s
    }
}
