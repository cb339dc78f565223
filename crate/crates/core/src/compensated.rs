//! Kahan–Neumaier compensated accumulation.
//!
//! Every long sum in the crate (partial sums of eta, power sums, the
//! O(N²) cross-term) goes through [`NeumaierSum`], which keeps the running
//! rounding error in a separate compensation term. The error of an
//! N-term sum is then O(ε) times the largest partial magnitude instead of
//! O(N·ε).

use num_complex::Complex64;

/// Running compensated sum of `f64` values.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub const fn new() -> Self {
        Self {
            sum: 0.0,
            compensation: 0.0,
        }
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    /// Compensated total.
    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }

    /// The uncompensated running sum.
    #[inline]
    pub fn raw(&self) -> f64 {
        self.sum
    }

    /// Accumulated low-order correction not yet folded into [`raw`](Self::raw).
    #[inline]
    pub fn compensation(&self) -> f64 {
        self.compensation
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        iter.into_iter().for_each(|x| acc.add(x));
        acc
    }
}

/// Component-wise compensated sum of complex values.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ComplexNeumaierSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexNeumaierSum {
    pub const fn new() -> Self {
        Self {
            re: NeumaierSum::new(),
            im: NeumaierSum::new(),
        }
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}
