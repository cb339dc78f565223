//! Seeded property suites behind `verify`.

use std::f64::consts::{LN_2, PI};

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeta_lab::zeros::{ZERO_THRESHOLD, NONZERO_THRESHOLD};
use zeta_lab::{
    check_symmetry, cross_term_fast, diagnostic_series, functional_equation_residual, scan_zeros,
    verify_zero_equivalence, BrutePolicy, Complex64, StripPoint, ZeroVerdict,
};

use crate::error::CliError;
use crate::rows::VerifyRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identity,
    Functional,
    Equivalence,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Identity => "identity",
            Suite::Functional => "functional",
            Suite::Equivalence => "equivalence",
            Suite::All => "all",
        }
    }
}

pub const IDENTITY_POINTS: usize = 100;
pub const IDENTITY_MAX_N: usize = 2000;
pub const IDENTITY_LIMIT: f64 = 1e-9;
pub const FUNCTIONAL_LIMIT: f64 = 1e-6;
pub const IMPLICATION_POINTS: usize = 20;
/// Relative mismatch allowed in `|η| = |1 - 2^(1-s)| |ζ|`.
pub const IMPLICATION_LIMIT: f64 = 1e-6;
/// Ordinates of the first three zeros above 10, to six decimals.
pub const KNOWN_ZEROS: [f64; 3] = [14.134725, 21.022040, 25.010858];
pub const KNOWN_ZERO_TOLERANCE: f64 = 1e-6;
/// `|ζ|` must exceed this at the factor zero on `Re(s) = 1`.
pub const BOUNDARY_ZETA_FLOOR: f64 = 0.1;

/// Whether a check bounds its residual from above or from below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub bound: Bound,
    pub row: VerifyRow,
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            checks: Vec::new(),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        check: &str,
        point: Option<(f64, f64)>,
        n: Option<u64>,
        residual: f64,
        limit: f64,
        bound: Bound,
        passed: bool,
    ) {
        self.checks.push(Check {
            suite: self.suite,
            bound,
            row: VerifyRow {
                experiment_id: format!("verify-{}", self.suite),
                check: check.to_owned(),
                sigma: point.map(|p| p.0),
                t: point.map(|p| p.1),
                n,
                residual,
                limit,
                passed,
                wall_time_ms: 0,
            },
        });
    }

    fn upper(&mut self, check: &str, point: Option<(f64, f64)>, n: Option<u64>, residual: f64, limit: f64) {
        self.push(check, point, n, residual, limit, Bound::Upper, residual <= limit);
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<Vec<Check>, CliError> {
    Ok(match suite {
        Suite::Identity => identity(seed)?,
        Suite::Functional => functional()?,
        Suite::Equivalence => equivalence(seed)?,
        Suite::All => {
            let mut all = identity(seed)?;
            all.extend(functional()?);
            all.extend(equivalence(seed)?);
            all
        }
    })
}

/// Random `(σ, t)` with σ strictly inside (0, 1).
fn strip_point(rng: &mut ChaCha8Rng, t_range: f64) -> (f64, f64) {
    let sigma = rng.random_range(0.01..0.99);
    let t = rng.random_range(-t_range..t_range);
    (sigma, t)
}

fn identity(seed: u64) -> Result<Vec<Check>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rec = Recorder::new("identity");
    for _ in 0..IDENTITY_POINTS {
        let (sigma, t) = strip_point(&mut rng, 50.0);
        let n = rng.random_range(1..=IDENTITY_MAX_N);
        let record = diagnostic_series(StripPoint::new(sigma, t), &[n], BrutePolicy::Always)?[0];
        let relative = record.identity_residual / record.eta_abs_sq.max(1.0);
        rec.upper("combined-sum", Some((sigma, t)), Some(n as u64), relative, IDENTITY_LIMIT);
        let fast = cross_term_fast(sigma, t, n)?;
        let gap = (fast - record.cross_term).abs() / record.cross_term.abs().max(1.0);
        rec.upper("fast-vs-brute", Some((sigma, t)), Some(n as u64), gap, IDENTITY_LIMIT);
    }
    Ok(rec.checks)
}

/// Five abscissae in [0.2, 0.8] times four ordinates `±|t|` in [2, 30].
pub fn functional_grid() -> Vec<(f64, f64)> {
    (0..20)
        .map(|i| {
            let sigma = 0.2 + 0.6 * (i % 5) as f64 / 4.0;
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            (sigma, sign * (2.0 + 28.0 * (i / 5) as f64 / 3.0))
        })
        .collect()
}

fn functional() -> Result<Vec<Check>, CliError> {
    let mut rec = Recorder::new("functional");
    for (sigma, t) in functional_grid() {
        let residual = functional_equation_residual(Complex64::new(sigma, t))?;
        rec.upper("functional-residual", Some((sigma, t)), None, residual, FUNCTIONAL_LIMIT);
    }
    Ok(rec.checks)
}

fn equivalence(seed: u64) -> Result<Vec<Check>, CliError> {
    let mut rec = Recorder::new("equivalence");
    let found = scan_zeros(10.0, 30.0, 0.1)?;
    for known in KNOWN_ZEROS {
        let nearest = found
            .iter()
            .map(|c| (c.refined_t - known).abs())
            .fold(f64::INFINITY, f64::min);
        rec.upper("zero-located", Some((0.5, known)), None, nearest, KNOWN_ZERO_TOLERANCE);
    }
    rec.upper(
        "no-extra-zeros",
        None,
        None,
        found.len().saturating_sub(KNOWN_ZEROS.len()) as f64,
        0.0,
    );
    for cand in &found {
        let point = Some((0.5, cand.refined_t));
        let report = verify_zero_equivalence(cand.point())?;
        let both = report.verdict == ZeroVerdict::BothZero;
        rec.push("both-zero-eta", point, None, report.eta_abs, ZERO_THRESHOLD, Bound::Upper, both && report.eta_abs < ZERO_THRESHOLD);
        rec.push("both-zero-zeta", point, None, report.zeta_abs, ZERO_THRESHOLD, Bound::Upper, both && report.zeta_abs < ZERO_THRESHOLD);
        let symmetry = check_symmetry(cand)?;
        rec.upper("conjugate-zero", point, None, symmetry.conjugate_residual, ZERO_THRESHOLD);
    }

    let boundary = StripPoint::new(1.0, 2.0 * PI / LN_2);
    let report = verify_zero_equivalence(boundary)?;
    let is_boundary = report.verdict == ZeroVerdict::FactorZeroBoundary;
    let point = Some((boundary.sigma, boundary.t));
    rec.push("boundary-eta-zero", point, None, report.eta_abs, ZERO_THRESHOLD, Bound::Upper, is_boundary && report.eta_abs < ZERO_THRESHOLD);
    rec.push("boundary-zeta-nonzero", point, None, report.zeta_abs, BOUNDARY_ZETA_FLOOR, Bound::Lower, is_boundary && report.zeta_abs > BOUNDARY_ZETA_FLOOR);

    let plain = StripPoint::new(0.5, 1.0);
    let report = verify_zero_equivalence(plain)?;
    let smaller = report.eta_abs.min(report.zeta_abs);
    rec.push("neither-zero", Some((0.5, 1.0)), None, smaller, NONZERO_THRESHOLD, Bound::Lower, report.verdict == ZeroVerdict::NeitherZero);

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for _ in 0..IMPLICATION_POINTS {
        let (sigma, t) = strip_point(&mut rng, 40.0);
        let report = verify_zero_equivalence(StripPoint::new(sigma, t))?;
        let agree = report.eta_below == report.zeta_below_scaled;
        let scaled = report.factor_abs * report.zeta_abs;
        let mismatch = (report.eta_abs - scaled).abs() / report.eta_abs.max(f64::MIN_POSITIVE);
        rec.push("implication", Some((sigma, t)), None, mismatch, IMPLICATION_LIMIT, Bound::Upper, agree && mismatch <= IMPLICATION_LIMIT);
    }
    Ok(rec.checks)
}

/// Per-check lines `suite/check: passed/total passed, worst ... (limit ...)`
/// in order of first appearance, followed by an overall verdict line.
pub fn summarize(suite: Suite, checks: &[Check]) -> (String, bool) {
    let mut groups: Vec<(String, Bound, usize, usize, f64, f64)> = Vec::new();
    for c in checks {
        let key = format!("{}/{}", c.suite, c.row.check);
        let idx = match groups.iter().position(|g| g.0 == key) {
            Some(i) => i,
            None => {
                let start = match c.bound {
                    Bound::Upper => f64::NEG_INFINITY,
                    Bound::Lower => f64::INFINITY,
                };
                groups.push((key, c.bound, 0, 0, start, c.row.limit));
                groups.len() - 1
            }
        };
        let g = &mut groups[idx];
        g.2 += usize::from(c.row.passed);
        g.3 += 1;
        g.4 = match c.bound {
            Bound::Upper => g.4.max(c.row.residual),
            Bound::Lower => g.4.min(c.row.residual),
        };
    }
    let width = groups.iter().map(|g| g.0.len()).max().unwrap_or(0);
    let mut text = String::new();
    for (key, bound, passed, total, worst, limit) in &groups {
        let relation = match bound {
            Bound::Upper => "<=",
            Bound::Lower => ">",
        };
        text.push_str(&format!(
            "{key:<width$}  {passed:>3}/{total:<3} passed  worst {worst:.3e}  (needs {relation} {limit:.1e})\n"
        ));
    }
    let ok = checks.iter().all(|c| c.row.passed);
    let failed = checks.iter().filter(|c| !c.row.passed).count();
    if ok {
        text.push_str(&format!("verify {}: PASS ({} checks)\n", suite.name(), checks.len()));
    } else {
        text.push_str(&format!(
            "verify {}: FAIL ({failed} of {} checks failed)\n",
            suite.name(),
            checks.len()
        ));
    }
    (text, ok)
}
