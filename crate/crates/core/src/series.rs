//! Dirichlet eta and Riemann zeta series.
//!
//! `η(s) = Σ (-1)^(k-1) k^(-s) = (1 - 2^(1-s)) ζ(s)` converges for `Re(s) > 0`.
//! Three evaluation routes live here:
//!
//! * direct partial sums ([`eta_partial`], [`eta_direct`]), kept mostly as a
//!   cross-check and as the raw material for the diagnostics module;
//! * Cohen–Rodriguez-Villegas–Zagier acceleration ([`eta_accelerated`]),
//!   which converges like `(3 + √8)^(-n)` for a fixed term budget;
//! * Euler–Maclaurin summation of ζ with Bernoulli corrections up to B₈
//!   ([`zeta_euler_maclaurin`]), used where `1 - 2^(1-s)` vanishes and for
//!   `Re(s) <= 0`.
//!
//! Everything is binary64 with compensated accumulation. The validity
//! envelope is `|t| <= 100` and `N <= 10^7`.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::compensated::{ComplexNeumaierSum, NeumaierSum};
use crate::error::{Error, Result};
use crate::gamma::{gamma_complex, ln_gamma_complex};

/// Largest CVZ order. The weights grow like `(3 + √8)^n` and their running
/// sum overflows binary64 a little above n = 400.
pub const MAX_CVZ_ORDER: usize = 300;

/// Below this `|1 - 2^(1-s)|`, [`zeta_from_eta`] switches to Euler–Maclaurin.
pub const FACTOR_SWITCH_THRESHOLD: f64 = 1e-3;

/// Tolerance used by [`zeta_from_eta`] and friends when none is given.
pub const DEFAULT_TOL: f64 = 1e-11;

/// Multiplier on the root-sum-square rounding model of the CVZ sum.
/// Measured errors sit 10-100x below the resulting allowance.
const ROUNDING_SAFETY: f64 = 4.0;

/// Cap on the Euler–Maclaurin cut-off N.
pub const MAX_EULER_MACLAURIN_TERMS: usize = 10_000_000;

const CVZ_BASE: f64 = 5.828_427_124_746_19; // 3 + √8

/// `(-1)^(k-1) k^(-s)` split as `sign · k^(-σ) · (cos(t ln k) - i sin(t ln k))`.
#[derive(Debug, Clone, Copy)]
struct EtaTerm {
    cos_part: f64,
    sin_part: f64,
    power: f64,
}

#[inline]
fn eta_term(k: u64, sigma: f64, t: f64) -> EtaTerm {
    let ln_k = (k as f64).ln();
    let magnitude = (-sigma * ln_k).exp();
    let (sin, cos) = (t * ln_k).sin_cos();
    let signed = if k % 2 == 1 { magnitude } else { -magnitude };
    EtaTerm {
        cos_part: signed * cos,
        sin_part: signed * sin,
        power: (-2.0 * sigma * ln_k).exp(),
    }
}

/// `k^(-s)` for a positive integer `k`.
#[inline]
pub(crate) fn neg_power(k: u64, s: Complex64) -> Complex64 {
    let ln_k = (k as f64).ln();
    let magnitude = (-s.re * ln_k).exp();
    let (sin, cos) = (s.im * ln_k).sin_cos();
    Complex64::new(magnitude * cos, -magnitude * sin)
}

/// Running state of the partial sums `η_N(s)`.
///
/// Holds the cosine and sine component sums (so that
/// `η_N = cos_sum - i·sin_sum`) and the power sum `Σ k^(-2σ)`, each with its
/// compensation residual. Advancing from N to N+1 adds exactly the
/// (N+1)-th term of each series, so a state advanced step by step is
/// bit-identical to a fresh N-term summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumState {
    sigma: f64,
    t: f64,
    n_terms: u64,
    cos_sum: NeumaierSum,
    sin_sum: NeumaierSum,
    power_sum: NeumaierSum,
}

impl PartialSumState {
    /// Empty state (N = 0) for the argument `s`.
    pub fn new(s: Complex64) -> Self {
        Self {
            sigma: s.re,
            t: s.im,
            n_terms: 0,
            cos_sum: NeumaierSum::new(),
            sin_sum: NeumaierSum::new(),
            power_sum: NeumaierSum::new(),
        }
    }

    pub fn s(&self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }

    pub fn n_terms(&self) -> u64 {
        self.n_terms
    }

    /// Whether the underlying series converges (`Re(s) > 0`).
    pub fn convergent(&self) -> bool {
        self.sigma > 0.0
    }

    /// Adds the next term.
    pub fn advance(&mut self) {
        self.n_terms += 1;
        let term = eta_term(self.n_terms, self.sigma, self.t);
        self.cos_sum.add(term.cos_part);
        self.sin_sum.add(term.sin_part);
        self.power_sum.add(term.power);
    }

    /// Advances until `n_terms == n`. Does nothing if already past `n`.
    pub fn advance_to(&mut self, n: u64) {
        while self.n_terms < n {
            self.advance();
        }
    }

    /// `Σ (-1)^(k-1) cos(t ln k) / k^σ`
    pub fn cos_sum(&self) -> f64 {
        self.cos_sum.value()
    }

    /// `Σ (-1)^(k-1) sin(t ln k) / k^σ`
    pub fn sin_sum(&self) -> f64 {
        self.sin_sum.value()
    }

    /// `Σ k^(-2σ)`
    pub fn power_sum(&self) -> f64 {
        self.power_sum.value()
    }

    /// Compensation residuals of (cos, sin, power) accumulators.
    pub fn compensations(&self) -> [f64; 3] {
        [
            self.cos_sum.compensation(),
            self.sin_sum.compensation(),
            self.power_sum.compensation(),
        ]
    }

    /// `η_N(s) = cos_sum - i·sin_sum`
    pub fn eta(&self) -> Complex64 {
        Complex64::new(self.cos_sum(), -self.sin_sum())
    }

    /// `|η_N(s)|²`
    pub fn eta_abs_sq(&self) -> f64 {
        let c = self.cos_sum();
        let s = self.sin_sum();
        c * c + s * s
    }
}

/// `η_N(s) = Σ_{k=1}^{N} (-1)^(k-1) k^(-s)`, with the state that produced it.
///
/// Any `s` is accepted; for `Re(s) <= 0` the returned state reports
/// `convergent() == false`.
pub fn eta_partial(s: Complex64, n: u64) -> Result<(Complex64, PartialSumState)> {
    if n == 0 {
        return Err(Error::EmptySum);
    }
    let mut state = PartialSumState::new(s);
    state.advance_to(n);
    Ok((state.eta(), state))
}

/// How an [`EtaEvaluation`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EtaMethod {
    Direct,
    Accelerated,
    EulerMaclaurinFallback,
}

impl EtaMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            EtaMethod::Direct => "direct",
            EtaMethod::Accelerated => "accelerated",
            EtaMethod::EulerMaclaurinFallback => "euler-maclaurin-fallback",
        }
    }
}

/// A series value together with a bound on its error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaEvaluation {
    pub value: Complex64,
    pub n_terms_used: usize,
    pub method: EtaMethod,
    /// Truncation bound plus a rounding allowance.
    pub error_estimate: f64,
}

fn require_positive_sigma(s: Complex64, operation: &'static str) -> Result<()> {
    if !(s.re > 0.0) || !s.im.is_finite() || !s.re.is_finite() {
        return Err(Error::Domain {
            s,
            operation,
            requirement: "Re(s) > 0",
        });
    }
    Ok(())
}

/// Direct N-term summation with the alternating-pair tail bound
/// `|η - η_N| <= (1 + |s|/σ) (N+1)^(-σ)`.
pub fn eta_direct(s: Complex64, n: u64) -> Result<EtaEvaluation> {
    require_positive_sigma(s, "eta_direct")?;
    let (value, _) = eta_partial(s, n)?;
    let tail = (1.0 + s.norm() / s.re) * ((n + 1) as f64).powf(-s.re);
    let rounding = 4.0 * f64::EPSILON * (1.0 + s.norm() * ((n + 1) as f64).ln());
    Ok(EtaEvaluation {
        value,
        n_terms_used: n as usize,
        method: EtaMethod::Direct,
        error_estimate: tail + rounding,
    })
}

/// `ln(Γ(σ) / |Γ(s)|)`: the log of the total variation of the measure
/// representing `k ↦ (k+1)^(-s)` on [0, 1].
fn ln_measure_mass(s: Complex64) -> Result<f64> {
    let ln_gamma_sigma = ln_gamma_complex(Complex64::new(s.re, 0.0))?.re;
    let ln_abs_gamma_s = ln_gamma_complex(s)?.re;
    Ok(ln_gamma_sigma - ln_abs_gamma_s)
}

/// CVZ acceleration of `η(s)` at a fixed order.
///
/// With `d_n = ((3+√8)^n + (3+√8)^(-n)) / 2` the truncation error is at most
/// `Γ(σ) / (|Γ(s)| d_n)`.
pub fn eta_cvz(s: Complex64, order: usize) -> Result<EtaEvaluation> {
    require_positive_sigma(s, "eta_cvz")?;
    if order == 0 || order > MAX_CVZ_ORDER {
        return Err(Error::InvalidArgument(format!(
            "CVZ order must be in 1..={MAX_CVZ_ORDER}, got {order}"
        )));
    }
    let ln_mass = ln_measure_mass(s)?;
    let n = order as f64;
    let mut d = CVZ_BASE.powi(order as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0_f64;
    let mut c = -d;
    let mut acc = ComplexNeumaierSum::new();
    // Σ (w_k (2 + |s| ln(k+1)))² with w_k = c_k |a_k| / d: each term carries a
    // relative error of about ε (2 + |s| ln(k+1)), mostly from the phase
    // t·ln(k+1), and those errors add like a random walk.
    let mut rounding_sq = 0.0;
    let s_abs = s.norm();
    for k in 0..order {
        c = b - c;
        let a_k = neg_power(k as u64 + 1, s);
        acc.add(c * a_k);
        let w = (c / d).abs() * a_k.norm() * (2.0 + s_abs * ((k + 1) as f64).ln());
        rounding_sq += w * w;
        let kf = k as f64;
        b = (kf + n) * (kf - n) * b / ((kf + 0.5) * (kf + 1.0));
    }
    let value = acc.value() / d;
    let truncation = (ln_mass - d.ln()).exp();
    let rounding = ROUNDING_SAFETY * f64::EPSILON * (rounding_sq.sqrt() + value.norm());
    Ok(EtaEvaluation {
        value,
        n_terms_used: order,
        method: EtaMethod::Accelerated,
        error_estimate: truncation + rounding,
    })
}

/// Smallest CVZ order whose truncation bound is at most `target`.
fn cvz_order_for(s: Complex64, target: f64) -> Result<usize> {
    let ln_mass = ln_measure_mass(s)?;
    // ln d_n >= n ln(3+√8) - ln 2
    let needed = (ln_mass - target.ln() + LN_2) / CVZ_BASE.ln();
    Ok(needed.ceil().max(1.0) as usize)
}

/// `η(s)` to absolute tolerance `tol` via CVZ acceleration.
///
/// The order is the smallest one whose truncation bound is `<= tol / 2`;
/// the result fails with [`Error::NoConvergence`] (carrying the best value)
/// when that order exceeds [`MAX_CVZ_ORDER`] or the rounding allowance
/// pushes the estimate above `tol`.
pub fn eta_accelerated(s: Complex64, tol: f64) -> Result<EtaEvaluation> {
    require_positive_sigma(s, "eta_accelerated")?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let order = cvz_order_for(s, 0.5 * tol)?;
    let capped = order.min(MAX_CVZ_ORDER);
    let eval = eta_cvz(s, capped)?;
    if order > MAX_CVZ_ORDER || eval.error_estimate > tol {
        return Err(Error::NoConvergence {
            best: eval.value,
            error_estimate: eval.error_estimate,
            terms: eval.n_terms_used,
            tol,
        });
    }
    Ok(eval)
}

/// The factor `1 - 2^(1-s)` linking η and ζ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorInfo {
    pub factor: Complex64,
    /// `t · ln 2`
    pub theta: f64,
    /// Distance from `s` to the nearest zero `1 + 2πik / ln 2` of the factor.
    pub distance_to_nearest_factor_zero: f64,
    /// The `k` of that nearest zero.
    pub nearest_k: i64,
}

/// Ordinate spacing `2π / ln 2` of the factor zeros on `Re(s) = 1`.
pub const FACTOR_ZERO_SPACING: f64 = 2.0 * PI / LN_2;

/// The factor zero `1 + 2πik / ln 2`.
pub fn factor_zero(k: i64) -> Complex64 {
    Complex64::new(1.0, k as f64 * FACTOR_ZERO_SPACING)
}

pub fn factor_info(s: Complex64) -> FactorInfo {
    let theta = s.im * LN_2;
    // 2^(1-s) = 2^(1-σ) (cos θ - i sin θ)
    let scale = ((1.0 - s.re) * LN_2).exp();
    let (sin, cos) = theta.sin_cos();
    let factor = Complex64::new(1.0 - scale * cos, scale * sin);
    let nearest_k = (s.im / FACTOR_ZERO_SPACING).round() as i64;
    let distance_to_nearest_factor_zero = (s - factor_zero(nearest_k)).norm();
    FactorInfo {
        factor,
        theta,
        distance_to_nearest_factor_zero,
        nearest_k,
    }
}

/// Options for [`zeta_from_eta_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaOptions {
    /// Absolute tolerance handed to the η (or Euler–Maclaurin) evaluation.
    pub tol: f64,
    /// `|1 - 2^(1-s)|` below which the Euler–Maclaurin branch is used.
    pub switch_threshold: f64,
    /// When false, a small factor is an error instead of a branch switch.
    pub fallback: bool,
}

impl Default for ZetaOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            switch_threshold: FACTOR_SWITCH_THRESHOLD,
            fallback: true,
        }
    }
}

fn is_zeta_pole(s: Complex64) -> bool {
    (s - 1.0).norm() < f64::EPSILON
}

/// `ζ(s) = η(s) / (1 - 2^(1-s))` for `Re(s) > 0`, falling back to
/// Euler–Maclaurin near the zeros of the factor.
pub fn zeta_from_eta(s: Complex64) -> Result<EtaEvaluation> {
    zeta_from_eta_with(s, &ZetaOptions::default())
}

pub fn zeta_from_eta_with(s: Complex64, opts: &ZetaOptions) -> Result<EtaEvaluation> {
    if is_zeta_pole(s) {
        return Err(Error::ZetaPole);
    }
    require_positive_sigma(s, "zeta_from_eta")?;
    let info = factor_info(s);
    let modulus = info.factor.norm();
    if modulus < opts.switch_threshold {
        if !opts.fallback {
            return Err(Error::SingularFactor { s, modulus });
        }
        let mut eval = zeta_euler_maclaurin(s, opts.tol)?;
        eval.method = EtaMethod::EulerMaclaurinFallback;
        return Ok(eval);
    }
    zeta_eta_branch(s, opts.tol, info.factor)
}

/// The η-quotient branch alone, with no switching.
pub fn zeta_eta_branch(s: Complex64, tol: f64, factor: Complex64) -> Result<EtaEvaluation> {
    let eta = eta_accelerated(s, tol)?;
    let value = eta.value / factor;
    let modulus = factor.norm();
    Ok(EtaEvaluation {
        value,
        n_terms_used: eta.n_terms_used,
        method: EtaMethod::Accelerated,
        error_estimate: eta.error_estimate / modulus + 4.0 * f64::EPSILON * value.norm(),
    })
}

/// B₂, B₄, B₆, B₈ divided by (2j)!.
const BERNOULLI_OVER_FACTORIAL: [f64; 4] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
];

/// B₁₀ / 10!, which bounds the remainder after the B₈ correction.
const REMAINDER_BERNOULLI: f64 = 5.0 / 66.0 / 3_628_800.0;

/// Corrections kept (B₂ … B₈).
const EM_ORDER: usize = 4;

/// Rising factorial `s (s+1) … (s+m-1)`.
fn rising(s: Complex64, m: usize) -> Complex64 {
    (0..m).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (s + j as f64))
}

/// ζ(s) by Euler–Maclaurin summation:
///
/// `ζ(s) = Σ_{k<N} k^(-s) + N^(1-s)/(s-1) + N^(-s)/2 + Σ_{j=1}^{4} B_{2j}/(2j)! (s)_{2j-1} N^(-s-2j+1) + R`
///
/// with `|R| <= |(s)_9 B₁₀/10! N^(-s-9)| · |s+9| / (σ+9)`. N is the smallest
/// cut-off (at least 10) that pushes this bound under `tol / 2`. Valid for
/// `Re(s) > -7`, `s ≠ 1`.
pub fn zeta_euler_maclaurin(s: Complex64, tol: f64) -> Result<EtaEvaluation> {
    if is_zeta_pole(s) {
        return Err(Error::ZetaPole);
    }
    if !(s.re > -7.0) || !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain {
            s,
            operation: "zeta_euler_maclaurin",
            requirement: "-7 < Re(s)",
        });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let exponent = s.re + (2 * EM_ORDER + 1) as f64;
    let remainder_scale = rising(s, 2 * EM_ORDER + 1).norm()
        * REMAINDER_BERNOULLI
        * (s + (2 * EM_ORDER + 1) as f64).norm()
        / exponent;
    let cutoff = if remainder_scale == 0.0 {
        10.0
    } else {
        (remainder_scale / (0.5 * tol)).powf(1.0 / exponent).ceil().max(10.0)
    };
    if cutoff > MAX_EULER_MACLAURIN_TERMS as f64 {
        return Err(Error::NoConvergence {
            best: Complex64::new(f64::NAN, f64::NAN),
            error_estimate: f64::INFINITY,
            terms: MAX_EULER_MACLAURIN_TERMS,
            tol,
        });
    }
    let n = cutoff as u64;
    let nf = n as f64;

    let mut acc = ComplexNeumaierSum::new();
    let mut magnitude = 0.0;
    for k in 1..n {
        let term = neg_power(k, s);
        magnitude += term.norm();
        acc.add(term);
    }
    let n_pow = neg_power(n, s); // N^(-s)
    let integral_tail = n_pow * nf / (s - 1.0);
    acc.add(integral_tail);
    acc.add(0.5 * n_pow);
    magnitude += integral_tail.norm() + 0.5 * n_pow.norm();

    let mut n_shift = n_pow / nf; // N^(-s-1)
    for (j, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let correction = *coeff * rising(s, 2 * j + 1) * n_shift;
        magnitude += correction.norm();
        acc.add(correction);
        n_shift /= nf * nf;
    }

    let truncation = remainder_scale * nf.powf(-exponent);
    let value = acc.value();
    let rounding = 4.0 * f64::EPSILON * (magnitude + s.norm() * nf.ln() * magnitude.sqrt());
    Ok(EtaEvaluation {
        value,
        n_terms_used: n as usize,
        method: EtaMethod::EulerMaclaurinFallback,
        error_estimate: truncation + rounding,
    })
}

/// ζ(s) anywhere in `Re(s) > -7`, `s ≠ 1`: the η quotient (with fallback)
/// for `Re(s) > 0`, Euler–Maclaurin otherwise.
pub fn zeta(s: Complex64) -> Result<EtaEvaluation> {
    if is_zeta_pole(s) {
        return Err(Error::ZetaPole);
    }
    if s.re > 0.0 {
        zeta_from_eta(s)
    } else {
        zeta_euler_maclaurin(s, DEFAULT_TOL)
    }
}

/// Both sides of `ζ(1-s) = 2^(1-s) π^(-s) cos(πs/2) Γ(s) ζ(s)`, each
/// evaluated on its own.
pub fn functional_equation_sides(s: Complex64) -> Result<(Complex64, Complex64)> {
    let lhs = zeta(1.0 - s)?.value;
    let two_pow = ((1.0 - s) * LN_2).exp();
    let pi_pow = (-s * PI.ln()).exp();
    let cos = (0.5 * PI * s).cos();
    let gamma = gamma_complex(s)?;
    let zeta_s = zeta(s)?.value;
    Ok((lhs, two_pow * pi_pow * cos * gamma * zeta_s))
}

/// `|ζ(1-s) - 2^(1-s) π^(-s) cos(πs/2) Γ(s) ζ(s)|`
pub fn functional_equation_residual(s: Complex64) -> Result<f64> {
    let (lhs, rhs) = functional_equation_sides(s)?;
    Ok((lhs - rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_term_partial_sum_is_one() {
        for s in [c(0.5, 14.0), c(2.0, 0.0), c(-1.0, 3.0)] {
            let (value, state) = eta_partial(s, 1).unwrap();
            assert_eq!(value, c(1.0, 0.0));
            assert_eq!(state.n_terms(), 1);
        }
    }

    #[test]
    fn two_terms_at_one() {
        let (value, _) = eta_partial(c(1.0, 0.0), 2).unwrap();
        assert_eq!(value, c(0.5, 0.0));
    }

    #[test]
    fn zero_terms_is_rejected() {
        assert_eq!(eta_partial(c(0.5, 1.0), 0).unwrap_err(), Error::EmptySum);
    }

    #[test]
    fn non_convergent_arguments_are_flagged() {
        let (_, state) = eta_partial(c(-0.5, 2.0), 10).unwrap();
        assert!(!state.convergent());
        let (_, state) = eta_partial(c(0.5, 2.0), 10).unwrap();
        assert!(state.convergent());
    }

    #[test]
    fn advancing_matches_fresh_summation_bitwise() {
        let s = c(0.37, 21.5);
        let mut state = PartialSumState::new(s);
        for n in 1..=500u64 {
            state.advance();
            let (fresh, fresh_state) = eta_partial(s, n).unwrap();
            assert_eq!(state.eta(), fresh);
            assert_eq!(state, fresh_state);
        }
    }

    #[test]
    fn factor_values() {
        assert_eq!(factor_info(c(1.0, 0.0)).factor, c(0.0, 0.0));
        assert_eq!(factor_info(c(1.0, 0.0)).nearest_k, 0);
        assert!((factor_info(c(2.0, 0.0)).factor - c(0.5, 0.0)).norm() < 1e-16);
        let k1 = factor_info(factor_zero(1));
        assert!(k1.factor.norm() < 1e-12);
        assert_eq!(k1.nearest_k, 1);
        assert!(k1.distance_to_nearest_factor_zero < 1e-15);
        assert!((k1.theta - 2.0 * PI).abs() < 1e-14);
    }

    #[test]
    fn factor_does_not_vanish_inside_the_strip() {
        // |1 - 2^(1-s)| >= 2^(1-σ) - 1 > 0 for σ < 1.
        for k in -3..=3 {
            let s = factor_zero(k) - 0.1;
            assert!(factor_info(s).factor.norm() >= 2f64.powf(0.1) - 1.0 - 1e-15);
        }
    }

    #[test]
    fn zeta_pole_is_an_error() {
        assert_eq!(zeta_from_eta(c(1.0, 0.0)).unwrap_err(), Error::ZetaPole);
        assert_eq!(zeta(c(1.0, 0.0)).unwrap_err(), Error::ZetaPole);
        assert_eq!(zeta_euler_maclaurin(c(1.0, 0.0), 1e-10).unwrap_err(), Error::ZetaPole);
    }

    #[test]
    fn singular_factor_without_fallback_is_an_error() {
        let opts = ZetaOptions {
            fallback: false,
            ..ZetaOptions::default()
        };
        match zeta_from_eta_with(factor_zero(1), &opts) {
            Err(Error::SingularFactor { modulus, .. }) => assert!(modulus < 1e-12),
            other => panic!("expected SingularFactor, got {other:?}"),
        }
        let eval = zeta_from_eta(factor_zero(1)).unwrap();
        assert_eq!(eval.method, EtaMethod::EulerMaclaurinFallback);
        assert!(eval.value.norm().is_finite());
    }

    #[test]
    fn eta_domain_errors() {
        assert!(eta_accelerated(c(0.0, 1.0), 1e-10).is_err());
        assert!(eta_accelerated(c(0.5, 1.0), 0.0).is_err());
        assert!(eta_cvz(c(0.5, 1.0), 0).is_err());
        assert!(eta_cvz(c(0.5, 1.0), MAX_CVZ_ORDER + 1).is_err());
    }

    #[test]
    fn unattainable_tolerance_reports_best_value() {
        match eta_accelerated(c(0.5, 30.0), 1e-300) {
            Err(Error::NoConvergence { best, terms, .. }) => {
                assert!(best.norm().is_finite());
                assert_eq!(terms, MAX_CVZ_ORDER);
            }
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn trivial_zeros_from_euler_maclaurin() {
        for n in [-2.0, -4.0, -6.0] {
            let z = zeta_euler_maclaurin(c(n, 0.0), 1e-12).unwrap();
            assert!(z.value.norm() <= z.error_estimate, "zeta({n}) = {}", z.value);
            assert!(z.value.norm() < 1e-8, "zeta({n}) = {}", z.value);
        }
        let z = zeta_euler_maclaurin(c(-2.0, 0.0), 1e-12).unwrap();
        assert!(z.value.norm() < 1e-12);
    }

    #[test]
    fn zeta_at_negative_one_and_zero() {
        let z = zeta(c(-1.0, 0.0)).unwrap().value;
        assert!((z - c(-1.0 / 12.0, 0.0)).norm() < 1e-12);
        let z = zeta(c(0.0, 0.0)).unwrap().value;
        assert!((z - c(-0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn functional_equation_at_three_uses_trivial_zero() {
        let (lhs, rhs) = functional_equation_sides(c(3.0, 0.0)).unwrap();
        assert!(lhs.norm() < 1e-10);
        assert!(rhs.norm() < 1e-10);
    }

    #[test]
    fn functional_equation_propagates_poles() {
        // s = 0: Γ pole (and ζ(1) on the left side).
        assert!(functional_equation_residual(c(0.0, 0.0)).is_err());
        assert_eq!(functional_equation_residual(c(1.0, 0.0)).unwrap_err(), Error::ZetaPole);
    }
}
