use num_complex::Complex64;

use crate::error::{Error, Result};

/// Where a point sits relative to the critical strip `0 < Re(s) < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StripRegion {
    OpenStrip,
    /// `Re(s)` is exactly 0 or 1.
    Boundary,
    Exterior,
}

/// A complex argument `s = sigma + i t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripPoint {
    pub sigma: f64,
    pub t: f64,
}

impl StripPoint {
    pub const fn new(sigma: f64, t: f64) -> Self {
        Self { sigma, t }
    }

    /// The point `1/2 + i t` on the critical line.
    pub const fn critical(t: f64) -> Self {
        Self { sigma: 0.5, t }
    }

    pub fn s(&self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }

    pub fn region(&self) -> StripRegion {
        if self.sigma > 0.0 && self.sigma < 1.0 {
            StripRegion::OpenStrip
        } else if self.sigma == 0.0 || self.sigma == 1.0 {
            StripRegion::Boundary
        } else {
            StripRegion::Exterior
        }
    }

    pub fn is_finite(&self) -> bool {
        self.sigma.is_finite() && self.t.is_finite()
    }

    /// Rejects anything outside the open strip.
    pub fn require_open_strip(&self, operation: &'static str) -> Result<()> {
        if !self.is_finite() || self.region() != StripRegion::OpenStrip {
            return Err(Error::Domain {
                s: self.s(),
                operation,
                requirement: "0 < Re(s) < 1",
            });
        }
        Ok(())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.sigma, -self.t)
    }

    /// The reflection `s -> 1 - s`.
    pub fn reflect(&self) -> Self {
        Self::new(1.0 - self.sigma, -self.t)
    }
}

impl From<Complex64> for StripPoint {
    fn from(s: Complex64) -> Self {
        Self::new(s.re, s.im)
    }
}

impl From<StripPoint> for Complex64 {
    fn from(p: StripPoint) -> Self {
        p.s()
    }
}
