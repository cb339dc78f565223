//! Critical-line zeros through the Hardy Z-function.
//!
//! `Z(t) = e^{iθ(t)} ζ(1/2 + it)` is real for real t, so its sign changes
//! bracket zeros of ζ on the critical line. Brackets found on a uniform
//! grid are refined by plain bisection.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gamma::ln_gamma_complex;
use crate::series::{
    eta_accelerated, factor_info, zeta_from_eta, DEFAULT_TOL, FACTOR_SWITCH_THRESHOLD,
};
use crate::strip::{StripPoint, StripRegion};

/// Below this modulus a value counts as a zero.
pub const ZERO_THRESHOLD: f64 = 1e-6;
/// Above this modulus a value counts as non-zero; in between is indeterminate.
pub const NONZERO_THRESHOLD: f64 = 1e-2;
/// Bisection stops once the bracket is narrower than this.
pub const BRACKET_WIDTH: f64 = 1e-10;
/// Default grid step for [`scan_zeros`].
pub const DEFAULT_SCAN_STEP: f64 = 0.1;
/// `|t|` from which θ uses the asymptotic series.
pub const THETA_ASYMPTOTIC_FROM: f64 = 10.0;

const PHASE_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaMethod {
    Asymptotic,
    LogGamma,
}

/// Riemann–Siegel phase θ(t) and the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaValue {
    pub t: f64,
    pub theta: f64,
    pub method: ThetaMethod,
}

/// `θ(t) ≈ t/2 ln(t/2π) - t/2 - π/8 + 1/(48t) + 7/(5760t³)`
pub fn theta_asymptotic(t: f64) -> f64 {
    let a = t.abs();
    let value = 0.5 * a * (a / (2.0 * PI)).ln() - 0.5 * a - PI / 8.0
        + 1.0 / (48.0 * a)
        + 7.0 / (5760.0 * a * a * a);
    if t < 0.0 {
        -value
    } else {
        value
    }
}

/// `θ(t) = arg Γ(1/4 + it/2) - (t/2) ln π`, with the continuous argument.
pub fn theta_log_gamma(t: f64) -> Result<f64> {
    let a = t.abs();
    let lg = ln_gamma_complex(Complex64::new(0.25, 0.5 * a))?;
    let value = lg.im - 0.5 * a * PI.ln();
    Ok(if t < 0.0 { -value } else { value })
}

/// θ(t), asymptotic for `|t| >= 10` and log-gamma below. Odd in t.
pub fn theta_rs(t: f64) -> Result<ThetaValue> {
    if t == 0.0 || !t.is_finite() {
        return Err(Error::InvalidArgument(format!("theta needs finite t != 0, got {t}")));
    }
    let (theta, method) = if t.abs() >= THETA_ASYMPTOTIC_FROM {
        (theta_asymptotic(t), ThetaMethod::Asymptotic)
    } else {
        (theta_log_gamma(t)?, ThetaMethod::LogGamma)
    };
    Ok(ThetaValue { t, theta, method })
}

/// `e^{iθ(t)} ζ(1/2 + it)` before the imaginary part is dropped.
pub fn hardy_z_complex(t: f64) -> Result<Complex64> {
    let theta = theta_rs(t)?.theta;
    let zeta = zeta_from_eta(StripPoint::critical(t).s())?.value;
    Ok(Complex64::from_polar(1.0, theta) * zeta)
}

/// Hardy's `Z(t)`, after checking that the imaginary part of
/// `e^{iθ} ζ(1/2+it)` is below 1e-8 (relative to `max(1, |ζ|)`).
pub fn hardy_z(t: f64) -> Result<f64> {
    let z = hardy_z_complex(t)?;
    if z.im.abs() > PHASE_TOLERANCE * z.norm().max(1.0) {
        return Err(Error::PhaseMismatch { t, imaginary: z.im });
    }
    Ok(z.re)
}

/// A bisection-refined zero ordinate on the critical line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroCandidate {
    /// Final bracket `(t_lo, t_hi)`, narrower than [`BRACKET_WIDTH`].
    pub bracket: (f64, f64),
    pub refined_t: f64,
    /// `|Z(refined_t)|`
    pub z_residual: f64,
    /// `|η(1/2 + i refined_t)|`
    pub eta_residual: f64,
    /// `|ζ(1/2 + i refined_t)|`
    pub zeta_residual: f64,
    pub iterations: usize,
}

impl ZeroCandidate {
    pub fn point(&self) -> StripPoint {
        StripPoint::critical(self.refined_t)
    }
}

fn bisect(mut lo: f64, mut hi: f64, mut z_lo: f64) -> Result<(f64, f64, usize)> {
    let mut iterations = 0;
    while hi - lo >= BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let z_mid = hardy_z(mid)?;
        iterations += 1;
        if z_mid == 0.0 {
            let half = 0.25 * BRACKET_WIDTH;
            return Ok((mid - half, mid + half, iterations));
        }
        if (z_mid < 0.0) == (z_lo < 0.0) {
            lo = mid;
            z_lo = z_mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi, iterations))
}

fn refine(lo: f64, hi: f64, z_lo: f64) -> Result<ZeroCandidate> {
    let (lo, hi, iterations) = bisect(lo, hi, z_lo)?;
    let refined_t = 0.5 * (lo + hi);
    let s = StripPoint::critical(refined_t).s();
    Ok(ZeroCandidate {
        bracket: (lo, hi),
        refined_t,
        z_residual: hardy_z(refined_t)?.abs(),
        eta_residual: eta_accelerated(s, DEFAULT_TOL)?.value.norm(),
        zeta_residual: zeta_from_eta(s)?.value.norm(),
        iterations,
    })
}

/// Every sign change of Z on the grid `t_lo + i·step` (plus `t_hi`), each
/// refined to a bracket narrower than 1e-10. Pairs of zeros closer than
/// `step` can be missed.
pub fn scan_zeros(t_lo: f64, t_hi: f64, step: f64) -> Result<Vec<ZeroCandidate>> {
    if !(t_lo > 0.0 && t_lo < t_hi && t_hi.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "scan range must satisfy 0 < t_lo < t_hi, got [{t_lo}, {t_hi}]"
        )));
    }
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::InvalidArgument(format!("scan step must be positive, got {step}")));
    }
    let intervals = ((t_hi - t_lo) / step).floor() as usize;
    let mut grid: Vec<f64> = (0..=intervals).map(|i| t_lo + i as f64 * step).collect();
    if grid.last().is_some_and(|&last| last < t_hi) {
        grid.push(t_hi);
    }
    let values: Vec<f64> = grid.par_iter().map(|&t| hardy_z(t)).collect::<Result<_>>()?;

    let brackets: Vec<(f64, f64, f64)> = (1..grid.len())
        .filter(|&i| values[i - 1] * values[i] < 0.0)
        .map(|i| (grid[i - 1], grid[i], values[i - 1]))
        .collect();

    brackets
        .into_par_iter()
        .map(|(lo, hi, z_lo)| refine(lo, hi, z_lo))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZeroVerdict {
    BothZero,
    NeitherZero,
    /// η vanishes because `1 - 2^(1-s)` does, while ζ does not.
    FactorZeroBoundary,
    Indeterminate,
}

impl ZeroVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            ZeroVerdict::BothZero => "both-zero",
            ZeroVerdict::NeitherZero => "neither-zero",
            ZeroVerdict::FactorZeroBoundary => "factor-zero-boundary",
            ZeroVerdict::Indeterminate => "indeterminate",
        }
    }
}

/// Side-by-side moduli of η, ζ and the factor at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceReport {
    pub point: StripPoint,
    pub eta_abs: f64,
    pub zeta_abs: f64,
    pub factor_abs: f64,
    /// `|η| < ZERO_THRESHOLD`
    pub eta_below: bool,
    /// `|ζ| < ZERO_THRESHOLD / |factor|`; matches `eta_below` wherever the
    /// factor is non-zero.
    pub zeta_below_scaled: bool,
    pub verdict: ZeroVerdict,
}

/// Compares `|η(s)|`, `|ζ(s)|` and `|1 - 2^(1-s)|` at a point of the open
/// strip, or on `Re(s) = 1` to exhibit a factor zero.
pub fn verify_zero_equivalence(point: StripPoint) -> Result<EquivalenceReport> {
    let on_right_edge = point.sigma == 1.0 && point.t.is_finite();
    if point.region() != StripRegion::OpenStrip && !on_right_edge {
        return Err(Error::Domain {
            s: point.s(),
            operation: "verify_zero_equivalence",
            requirement: "0 < Re(s) < 1, or Re(s) = 1",
        });
    }
    let s = point.s();
    let eta_abs = eta_accelerated(s, DEFAULT_TOL)?.value.norm();
    let zeta_abs = zeta_from_eta(s)?.value.norm();
    let factor_abs = factor_info(s).factor.norm();

    let verdict = if eta_abs < ZERO_THRESHOLD {
        if factor_abs < FACTOR_SWITCH_THRESHOLD && zeta_abs > NONZERO_THRESHOLD {
            ZeroVerdict::FactorZeroBoundary
        } else if zeta_abs < ZERO_THRESHOLD {
            ZeroVerdict::BothZero
        } else {
            ZeroVerdict::Indeterminate
        }
    } else if eta_abs > NONZERO_THRESHOLD && zeta_abs > NONZERO_THRESHOLD {
        ZeroVerdict::NeitherZero
    } else {
        ZeroVerdict::Indeterminate
    };

    Ok(EquivalenceReport {
        point,
        eta_abs,
        zeta_abs,
        factor_abs,
        eta_below: eta_abs < ZERO_THRESHOLD,
        zeta_below_scaled: zeta_abs * factor_abs < ZERO_THRESHOLD,
        verdict,
    })
}

/// Residuals at a zero and at its mirror images.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryReport {
    pub refined_t: f64,
    /// `|ζ(1/2 + it)|`
    pub zeta_residual: f64,
    /// `|ζ(1/2 - it)|`
    pub conjugate_residual: f64,
    /// `|ζ(1 - s)|`; on the critical line `1 - s` is the conjugate point.
    pub reflection_residual: f64,
}

impl SymmetryReport {
    pub fn passes(&self) -> bool {
        self.conjugate_residual < ZERO_THRESHOLD && self.reflection_residual < ZERO_THRESHOLD
    }
}

pub fn check_symmetry(candidate: &ZeroCandidate) -> Result<SymmetryReport> {
    let point = candidate.point();
    let conjugate_residual = zeta_from_eta(point.conj().s())?.value.norm();
    let reflection_residual = zeta_from_eta(point.reflect().s())?.value.norm();
    Ok(SymmetryReport {
        refined_t: candidate.refined_t,
        zeta_residual: candidate.zeta_residual,
        conjugate_residual,
        reflection_residual,
    })
}
