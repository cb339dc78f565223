//! Row schemas of every command.

use crate::error::CliError;
use crate::report::{Cell, Fields, Record};

#[derive(Debug, Clone, PartialEq)]
pub struct EvalRow {
    pub experiment_id: String,
    pub sigma: f64,
    pub t: f64,
    pub what: String,
    pub re: f64,
    pub im: f64,
    pub abs: f64,
    pub n_terms: u64,
    pub method: String,
    pub error_estimate: Option<f64>,
    pub wall_time_ms: u64,
}

impl Record for EvalRow {
    const COLUMNS: &'static [&'static str] = &[
        "experiment_id",
        "sigma",
        "t",
        "what",
        "re",
        "im",
        "abs",
        "n_terms",
        "method",
        "error_estimate",
        "wall_time_ms",
    ];

    fn cells(&self) -> Vec<Cell> {
        vec![
            self.experiment_id.as_str().into(),
            self.sigma.into(),
            self.t.into(),
            self.what.as_str().into(),
            self.re.into(),
            self.im.into(),
            self.abs.into(),
            self.n_terms.into(),
            self.method.as_str().into(),
            self.error_estimate.into(),
            self.wall_time_ms.into(),
        ]
    }

    fn from_fields(fields: &[String]) -> Result<Self, CliError> {
        let mut f = Fields::new::<Self>(fields)?;
        Ok(Self {
            experiment_id: f.text()?,
            sigma: f.float()?,
            t: f.float()?,
            what: f.text()?,
            re: f.float()?,
            im: f.float()?,
            abs: f.float()?,
            n_terms: f.int()?,
            method: f.text()?,
            error_estimate: f.opt_float()?,
            wall_time_ms: f.int()?,
        })
    }
}

/// One `(σ, t, N)` row of the combined-sum diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagRow {
    pub experiment_id: String,
    pub sigma: f64,
    pub t: f64,
    pub n: u64,
    pub p_n: f64,
    pub t_n: f64,
    pub s_n: f64,
    pub eta_abs_sq: f64,
    pub identity_residual: f64,
    /// `T_N + P_N / 2`
    pub extra: f64,
    pub wall_time_ms: u64,
}

impl Record for DiagRow {
    const COLUMNS: &'static [&'static str] = &[
        "experiment_id",
        "sigma",
        "t",
        "N",
        "P_N",
        "T_N",
        "S_N",
        "eta_abs_sq",
        "identity_residual",
        "extra",
        "wall_time_ms",
    ];

    fn cells(&self) -> Vec<Cell> {
        vec![
            self.experiment_id.as_str().into(),
            self.sigma.into(),
            self.t.into(),
            self.n.into(),
            self.p_n.into(),
            self.t_n.into(),
            self.s_n.into(),
            self.eta_abs_sq.into(),
            self.identity_residual.into(),
            self.extra.into(),
            self.wall_time_ms.into(),
        ]
    }

    fn from_fields(fields: &[String]) -> Result<Self, CliError> {
        let mut f = Fields::new::<Self>(fields)?;
        Ok(Self {
            experiment_id: f.text()?,
            sigma: f.float()?,
            t: f.float()?,
            n: f.int()?,
            p_n: f.float()?,
            t_n: f.float()?,
            s_n: f.float()?,
            eta_abs_sq: f.float()?,
            identity_residual: f.float()?,
            extra: f.float()?,
            wall_time_ms: f.int()?,
        })
    }
}

/// A refined zero with its equivalence and symmetry checks.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroRow {
    pub experiment_id: String,
    pub t_lo: f64,
    pub t_hi: f64,
    pub refined_t: f64,
    pub z_residual: f64,
    pub eta_residual: f64,
    pub zeta_residual: f64,
    pub iterations: u64,
    pub factor_abs: f64,
    pub verdict: String,
    pub conjugate_residual: f64,
    pub reflection_residual: f64,
    pub symmetric: bool,
    pub wall_time_ms: u64,
}

impl Record for ZeroRow {
    const COLUMNS: &'static [&'static str] = &[
        "experiment_id",
        "t_lo",
        "t_hi",
        "refined_t",
        "z_residual",
        "eta_residual",
        "zeta_residual",
        "iterations",
        "factor_abs",
        "verdict",
        "conjugate_residual",
        "reflection_residual",
        "symmetric",
        "wall_time_ms",
    ];

    fn cells(&self) -> Vec<Cell> {
        vec![
            self.experiment_id.as_str().into(),
            self.t_lo.into(),
            self.t_hi.into(),
            self.refined_t.into(),
            self.z_residual.into(),
            self.eta_residual.into(),
            self.zeta_residual.into(),
            self.iterations.into(),
            self.factor_abs.into(),
            self.verdict.as_str().into(),
            self.conjugate_residual.into(),
            self.reflection_residual.into(),
            self.symmetric.into(),
            self.wall_time_ms.into(),
        ]
    }

    fn from_fields(fields: &[String]) -> Result<Self, CliError> {
        let mut f = Fields::new::<Self>(fields)?;
        Ok(Self {
            experiment_id: f.text()?,
            t_lo: f.float()?,
            t_hi: f.float()?,
            refined_t: f.float()?,
            z_residual: f.float()?,
            eta_residual: f.float()?,
            zeta_residual: f.float()?,
            iterations: f.int()?,
            factor_abs: f.float()?,
            verdict: f.text()?,
            conjugate_residual: f.float()?,
            reflection_residual: f.float()?,
            symmetric: f.boolean()?,
            wall_time_ms: f.int()?,
        })
    }
}

/// `(u, F_N(u))` with the finite difference to the previous grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub experiment_id: String,
    pub t: f64,
    pub n: u64,
    pub u: f64,
    pub f_n: f64,
    pub delta_f: Option<f64>,
    pub slope: Option<f64>,
    pub wall_time_ms: u64,
}

impl Record for SweepRow {
    const COLUMNS: &'static [&'static str] =
        &["experiment_id", "t", "N", "u", "F_N", "delta_f", "slope", "wall_time_ms"];

    fn cells(&self) -> Vec<Cell> {
        vec![
            self.experiment_id.as_str().into(),
            self.t.into(),
            self.n.into(),
            self.u.into(),
            self.f_n.into(),
            self.delta_f.into(),
            self.slope.into(),
            self.wall_time_ms.into(),
        ]
    }

    fn from_fields(fields: &[String]) -> Result<Self, CliError> {
        let mut f = Fields::new::<Self>(fields)?;
        Ok(Self {
            experiment_id: f.text()?,
            t: f.float()?,
            n: f.int()?,
            u: f.float()?,
            f_n: f.float()?,
            delta_f: f.opt_float()?,
            slope: f.opt_float()?,
            wall_time_ms: f.int()?,
        })
    }
}

/// One check of a verification suite.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyRow {
    pub experiment_id: String,
    pub check: String,
    pub sigma: Option<f64>,
    pub t: Option<f64>,
    pub n: Option<u64>,
    pub residual: f64,
    pub limit: f64,
    pub passed: bool,
    pub wall_time_ms: u64,
}

impl Record for VerifyRow {
    const COLUMNS: &'static [&'static str] = &[
        "experiment_id",
        "check",
        "sigma",
        "t",
        "N",
        "residual",
        "limit",
        "passed",
        "wall_time_ms",
    ];

    fn cells(&self) -> Vec<Cell> {
        vec![
            self.experiment_id.as_str().into(),
            self.check.as_str().into(),
            self.sigma.into(),
            self.t.into(),
            self.n.map_or(Cell::Empty, Cell::Int),
            self.residual.into(),
            self.limit.into(),
            self.passed.into(),
            self.wall_time_ms.into(),
        ]
    }

    fn from_fields(fields: &[String]) -> Result<Self, CliError> {
        let mut f = Fields::new::<Self>(fields)?;
        Ok(Self {
            experiment_id: f.text()?,
            check: f.text()?,
            sigma: f.opt_float()?,
            t: f.opt_float()?,
            n: f.opt_int()?,
            residual: f.float()?,
            limit: f.float()?,
            passed: f.boolean()?,
            wall_time_ms: f.int()?,
        })
    }
}
