use num_complex::Complex64;
use thiserror::Error;

/// Failures shared by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a partial sum needs at least one term (N = 0)")]
    EmptySum,

    #[error("s = 1 is the pole of zeta")]
    ZetaPole,

    #[error("gamma has a pole at s = {0}")]
    GammaPole(f64),

    #[error(
        "1 - 2^(1-s) vanishes at s = {s} (|factor| = {modulus:.3e}) and the Euler-Maclaurin fallback is disabled"
    )]
    SingularFactor { s: Complex64, modulus: f64 },

    #[error("s = {s} is outside the domain of {operation}: {requirement}")]
    Domain {
        s: Complex64,
        operation: &'static str,
        requirement: &'static str,
    },

    #[error(
        "no convergence after {terms} terms: best value {best}, error estimate {error_estimate:.3e} (requested {tol:.3e})"
    )]
    NoConvergence {
        best: Complex64,
        error_estimate: f64,
        terms: usize,
        tol: f64,
    },

    #[error("brute-force cross term is limited to N <= {limit} (got N = {n}); use cross_term_fast")]
    CostGuard { n: usize, limit: usize },

    #[error("Z(t) phase check failed at t = {t}: imaginary part {imaginary:.3e}")]
    PhaseMismatch { t: f64, imaginary: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
