//! Numerical laboratory for the Dirichlet eta function, the Riemann zeta
//! function and the partial-sum quantities built from them in the critical
//! strip `0 < Re(s) < 1`.
//!
//! * [`series`]: eta partial sums, accelerated eta, ζ through the factor
//!   `1 - 2^(1-s)` with an Euler–Maclaurin fallback, the functional equation.
//! * [`gamma`]: complex Γ and ln Γ.
//! * [`diagnostics`]: power sums `P_N`, cross-terms `T_N`, the combined sum
//!   `S_N = P_N + 2T_N = |η_N|²`, finite-window convergence profiles,
//!   `C(σ) = ζ(2σ)` and the `F_N(u)` continuity sweep.
//! * [`zeros`]: Hardy Z, Riemann–Siegel θ, critical-line zero scanning and
//!   the η/ζ zero-equivalence checks.
//!
//! All functions are pure and safe to call from any number of threads.

pub mod compensated;
pub mod diagnostics;
pub mod error;
pub mod gamma;
pub mod series;
pub mod strip;
pub mod zeros;

pub use num_complex::Complex64;

pub use diagnostics::{
    c_alpha, convergence_profile, cross_term_brute, cross_term_fast, cross_term_sweep,
    diagnostic_series, power_sum, stabilization_profile, BrutePolicy, CAlphaResult, ConvergenceEntry,
    ConvergenceProfile, CrossTermSource, DiagnosticRecord, StabilizationRow, SweepPoint,
    BRUTE_FORCE_GUARD,
};
pub use error::{Error, Result};
pub use gamma::{gamma_complex, ln_gamma_complex};
pub use series::{
    eta_accelerated, eta_partial, factor_info, functional_equation_residual, zeta,
    zeta_euler_maclaurin, zeta_from_eta, EtaEvaluation, EtaMethod, FactorInfo, PartialSumState,
    ZetaOptions,
};
pub use strip::{StripPoint, StripRegion};
pub use zeros::{
    check_symmetry, hardy_z, scan_zeros, theta_rs, verify_zero_equivalence, EquivalenceReport,
    SymmetryReport, ThetaMethod, ThetaValue, ZeroCandidate, ZeroVerdict,
};
