//! Power sums, alternating cosine cross-terms and their combination.
//!
//! For `s = σ + it` and `η_N(s) = Σ_{k<=N} (-1)^(k-1) k^(-s)`, expanding the
//! squared modulus gives
//!
//! `|η_N(s)|² = P_N + 2 T_N`,
//!
//! with `P_N = Σ_{k<=N} k^(-2σ)` and
//! `T_N = Σ_{1<=k<k'<=N} (-1)^(k+k') cos(t ln(k/k')) / (k^σ k'^σ)`.
//! `T_N` is computed both literally in O(N²) ([`cross_term_brute`]) and
//! through the identity in O(N) ([`cross_term_fast`]); the two are checked
//! against each other throughout the test suites.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::compensated::NeumaierSum;
use crate::error::{Error, Result};
use crate::series::{zeta_from_eta, PartialSumState};
use crate::strip::StripPoint;

/// Largest N accepted by [`cross_term_brute`] (about 2×10⁸ pair evaluations).
pub const BRUTE_FORCE_GUARD: usize = 20_000;

/// Compensated `Σ_{k=1}^{N} k^(-2σ)`.
pub fn power_sum(sigma: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptySum);
    }
    let acc: NeumaierSum = (1..=n)
        .map(|k| (-2.0 * sigma * (k as f64).ln()).exp())
        .collect();
    Ok(acc.value())
}

/// `T_N` summed pair by pair (outer k', inner k < k'), compensated.
pub fn cross_term_brute(sigma: f64, t: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptySum);
    }
    if n > BRUTE_FORCE_GUARD {
        return Err(Error::CostGuard {
            n,
            limit: BRUTE_FORCE_GUARD,
        });
    }
    let logs: Vec<f64> = (1..=n).map(|k| (k as f64).ln()).collect();
    let weights: Vec<f64> = logs.iter().map(|&l| (-sigma * l).exp()).collect();
    let mut acc = NeumaierSum::new();
    for outer in 1..n {
        let (ln_outer, w_outer) = (logs[outer], weights[outer]);
        for inner in 0..outer {
            // k = inner + 1, k' = outer + 1, so (-1)^(k+k') = (-1)^(inner+outer)
            let sign = if (inner + outer) % 2 == 0 { 1.0 } else { -1.0 };
            let angle = t * (logs[inner] - ln_outer);
            acc.add(sign * angle.cos() * weights[inner] * w_outer);
        }
    }
    Ok(acc.value())
}

/// `T_N = (|η_N(σ+it)|² - P_N) / 2` in O(N).
pub fn cross_term_fast(sigma: f64, t: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptySum);
    }
    let mut state = PartialSumState::new(StripPoint::new(sigma, t).s());
    state.advance_to(n as u64);
    Ok(0.5 * (state.eta_abs_sq() - state.power_sum()))
}

/// Which path produced a stored cross-term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossTermSource {
    Brute,
    Fast,
}

/// When [`diagnostic_series`] runs the O(N²) path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BrutePolicy {
    /// Brute force whenever `N <= BRUTE_FORCE_GUARD`.
    #[default]
    Auto,
    /// Brute force up to the given N (clamped to the guard).
    UpTo(usize),
    Never,
    /// Brute force for every N; exceeding the guard is an error.
    Always,
}

/// One row of the combined-sum diagnostics at `(σ, t, N)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagnosticRecord {
    pub n_terms: usize,
    /// `P_N`
    pub power_sum: f64,
    /// `T_N`
    pub cross_term: f64,
    pub cross_term_source: CrossTermSource,
    /// `S_N = P_N + 2 T_N`
    pub combined_sum: f64,
    /// `|η_N(s)|²`
    pub eta_abs_sq: f64,
    /// `|S_N - |η_N|²|`
    pub identity_residual: f64,
    /// Set for `t = 0`, which the argument about zeros excludes.
    pub degenerate_t: bool,
}

impl DiagnosticRecord {
    fn new(
        n_terms: usize,
        power_sum: f64,
        cross_term: f64,
        cross_term_source: CrossTermSource,
        eta_abs_sq: f64,
        t: f64,
    ) -> Self {
        let combined_sum = power_sum + 2.0 * cross_term;
        Self {
            n_terms,
            power_sum,
            cross_term,
            cross_term_source,
            combined_sum,
            eta_abs_sq,
            identity_residual: (combined_sum - eta_abs_sq).abs(),
            degenerate_t: t == 0.0,
        }
    }

    /// `T_N + P_N / 2 = |η_N|² / 2`. On the critical line `P_N` is the
    /// harmonic number, so this column tracks how far `T_N` sits from `-H_N/2`.
    pub fn critical_gap(&self) -> f64 {
        self.cross_term + 0.5 * self.power_sum
    }
}

/// One [`DiagnosticRecord`] per N of `n_list` (strictly increasing).
pub fn diagnostic_series(
    point: StripPoint,
    n_list: &[usize],
    brute: BrutePolicy,
) -> Result<Vec<DiagnosticRecord>> {
    point.require_open_strip("diagnostic_series")?;
    validate_n_list(n_list)?;
    let brute_limit = match brute {
        BrutePolicy::Auto => BRUTE_FORCE_GUARD,
        BrutePolicy::UpTo(n) => n.min(BRUTE_FORCE_GUARD),
        BrutePolicy::Never => 0,
        BrutePolicy::Always => usize::MAX,
    };

    let mut state = PartialSumState::new(point.s());
    let snapshots: Vec<(usize, f64, f64)> = n_list
        .iter()
        .map(|&n| {
            state.advance_to(n as u64);
            (n, state.power_sum(), state.eta_abs_sq())
        })
        .collect();

    snapshots
        .into_par_iter()
        .map(|(n, power, eta_abs_sq)| {
            if n <= brute_limit {
                let cross = cross_term_brute(point.sigma, point.t, n)?;
                Ok(DiagnosticRecord::new(
                    n,
                    power,
                    cross,
                    CrossTermSource::Brute,
                    eta_abs_sq,
                    point.t,
                ))
            } else {
                let cross = 0.5 * (eta_abs_sq - power);
                Ok(DiagnosticRecord::new(
                    n,
                    power,
                    cross,
                    CrossTermSource::Fast,
                    eta_abs_sq,
                    point.t,
                ))
            }
        })
        .collect()
}

pub(crate) fn validate_n_list(n_list: &[usize]) -> Result<()> {
    if n_list.is_empty() {
        return Err(Error::InvalidArgument("N list is empty".into()));
    }
    if n_list[0] == 0 {
        return Err(Error::EmptySum);
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("N list must be strictly increasing".into()));
    }
    Ok(())
}

/// Result of the finite-window convergence search for one ε.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceEntry {
    pub epsilon: f64,
    /// Smallest N satisfying the window condition, `None` if the budget ran out.
    pub n_of_epsilon: Option<usize>,
    /// `[N, M]` that was verified, or the searched range `[1, budget]` on failure.
    pub window_checked: RangeInclusive<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceProfile {
    pub point: StripPoint,
    pub check_factor: f64,
    pub budget: usize,
    /// Sorted by decreasing ε.
    pub entries: Vec<ConvergenceEntry>,
}

/// Default search budget for [`convergence_profile`].
pub const DEFAULT_PROFILE_BUDGET: usize = 100_000;

/// For each ε, the smallest `N <= budget` such that `|Re η_M(s)| < ε` and
/// `|Im η_M(s)| < ε` for every M in `[N, floor(check_factor·N)]`.
///
/// This turns "for every ε there is an N beyond which the partial sums stay
/// within ε of zero" into a finite, checkable statement.
pub fn convergence_profile(
    point: StripPoint,
    epsilons: &[f64],
    check_factor: f64,
    budget: usize,
) -> Result<ConvergenceProfile> {
    point.require_open_strip("convergence_profile")?;
    if epsilons.is_empty() {
        return Err(Error::InvalidArgument("epsilon list is empty".into()));
    }
    if let Some(bad) = epsilons.iter().find(|e| !(**e > 0.0) || !e.is_finite()) {
        return Err(Error::InvalidArgument(format!("epsilon must be positive, got {bad}")));
    }
    if !(check_factor >= 1.0) || !check_factor.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "check factor must be >= 1, got {check_factor}"
        )));
    }
    if budget == 0 {
        return Err(Error::InvalidArgument("search budget must be positive".into()));
    }

    let window_end = |n: usize| ((check_factor * n as f64).floor() as usize).max(n);
    let horizon = window_end(budget);

    // excursion[m] = max(|Re η_m|, |Im η_m|); index 0 unused.
    let mut state = PartialSumState::new(point.s());
    let mut excursion = vec![0.0; horizon + 1];
    for slot in excursion.iter_mut().skip(1) {
        state.advance();
        *slot = state.cos_sum().abs().max(state.sin_sum().abs());
    }

    let mut sorted: Vec<f64> = epsilons.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));

    let mut next_violation = vec![usize::MAX; horizon + 2];
    let entries = sorted
        .into_iter()
        .map(|epsilon| {
            for m in (1..=horizon).rev() {
                next_violation[m] = if excursion[m] >= epsilon {
                    m
                } else {
                    next_violation[m + 1]
                };
            }
            let found = (1..=budget).find(|&n| next_violation[n] > window_end(n));
            match found {
                Some(n) => ConvergenceEntry {
                    epsilon,
                    n_of_epsilon: Some(n),
                    window_checked: n..=window_end(n),
                },
                None => ConvergenceEntry {
                    epsilon,
                    n_of_epsilon: None,
                    window_checked: 1..=budget,
                },
            }
        })
        .collect();

    Ok(ConvergenceProfile {
        point,
        check_factor,
        budget,
        entries,
    })
}

/// Doubling comparison of `S_N = |η_N|²` at one N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilizationRow {
    pub n_terms: usize,
    pub s_n: f64,
    pub s_2n: f64,
    /// `|S_2N - S_N|`
    pub jump: f64,
    /// `max_{N<=M<=2N} |S_M - S_N|`
    pub window_oscillation: f64,
}

/// [`StabilizationRow`] for each N of `n_list` (strictly increasing), from a
/// single pass of the partial sums up to `2·max(n_list)`.
///
/// The jump alone samples one point of an oscillating sequence: the terms
/// carry a phase `t ln k`, so `S_2N - S_N` can be small for one N and larger
/// for the next. The window oscillation is the envelope of that sequence.
pub fn stabilization_profile(point: StripPoint, n_list: &[usize]) -> Result<Vec<StabilizationRow>> {
    point.require_open_strip("stabilization_profile")?;
    validate_n_list(n_list)?;
    let mut state = PartialSumState::new(point.s());
    let mut rows = Vec::with_capacity(n_list.len());
    let mut open: Vec<(usize, f64, f64)> = Vec::new();
    let mut pending = n_list.iter().copied().peekable();
    let last = 2 * n_list[n_list.len() - 1];
    for m in 1..=last {
        state.advance();
        let s_m = state.eta_abs_sq();
        if pending.peek() == Some(&m) {
            pending.next();
            open.push((m, s_m, 0.0));
        }
        for window in open.iter_mut() {
            window.2 = window.2.max((s_m - window.1).abs());
        }
        while let Some(&(n, s_n, osc)) = open.first() {
            if m < 2 * n {
                break;
            }
            rows.push(StabilizationRow {
                n_terms: n,
                s_n,
                s_2n: s_m,
                jump: (s_m - s_n).abs(),
                window_oscillation: osc,
            });
            open.remove(0);
        }
    }
    Ok(rows)
}

/// `C(σ) = lim P_N = ζ(2σ)` for `1/2 < σ < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CAlphaResult {
    pub sigma: f64,
    pub value: f64,
    pub exceeds_one: bool,
    pub error_estimate: f64,
}

pub fn c_alpha(sigma: f64) -> Result<CAlphaResult> {
    if !(sigma > 0.5 && sigma < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "C(sigma) needs 1/2 < sigma < 1, got {sigma}"
        )));
    }
    let eval = zeta_from_eta(num_complex::Complex64::new(2.0 * sigma, 0.0))?;
    let value = eval.value.re;
    Ok(CAlphaResult {
        sigma,
        value,
        exceeds_one: value > 1.0,
        error_estimate: eval.error_estimate,
    })
}

/// One point `(u, F_N(u))` of the continuity sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub u: f64,
    pub value: f64,
}

/// `F_N(u) = T_N` evaluated at `σ = u` for each grid value, sorted by u.
pub fn cross_term_sweep(u_grid: &[f64], t: f64, n: usize) -> Result<Vec<SweepPoint>> {
    if n == 0 {
        return Err(Error::EmptySum);
    }
    if let Some(bad) = u_grid.iter().find(|u| !(**u > 0.0 && **u < 1.0)) {
        return Err(Error::InvalidArgument(format!(
            "sweep grid values must lie in (0, 1), got {bad}"
        )));
    }
    let mut grid = u_grid.to_vec();
    grid.sort_by(f64::total_cmp);
    grid.par_iter()
        .map(|&u| Ok(SweepPoint { u, value: cross_term_fast(u, t, n)? }))
        .collect()
}

/// Largest `|ΔF / Δu|` between consecutive sweep points.
pub fn max_slope(points: &[SweepPoint]) -> f64 {
    points
        .windows(2)
        .filter(|w| w[1].u > w[0].u)
        .map(|w| ((w[1].value - w[0].value) / (w[1].u - w[0].u)).abs())
        .fold(0.0, f64::max)
}

/// `Σ_{k<k'<=N} 1 / (k k')`, which bounds `|F_N(u)|` for u near 1.
pub fn cross_term_bound_at_one(n: usize) -> f64 {
    // Σ_{k<k'} a_k a_k' = ((Σ a)² - Σ a²) / 2 with a_k = 1/k
    let sum: NeumaierSum = (1..=n).map(|k| 1.0 / k as f64).collect();
    let squares: NeumaierSum = (1..=n).map(|k| 1.0 / (k as f64 * k as f64)).collect();
    0.5 * (sum.value() * sum.value() - squares.value())
}
