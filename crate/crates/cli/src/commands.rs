use std::io::Write;
use std::time::Instant;

use zeta_lab::zeros::DEFAULT_SCAN_STEP;
use zeta_lab::{
    check_symmetry, cross_term_sweep, diagnostic_series, eta_accelerated, factor_info,
    functional_equation_residual, gamma_complex, scan_zeros, verify_zero_equivalence, zeta,
    BrutePolicy, Complex64, StripPoint,
};

use crate::cli::{DiagArgs, OutputArgs, Preset, SweepArgs, What, ZerosArgs};
use crate::config::{
    check_t, parse_n_list, parse_real, parse_real_grid, SweepConfig, MAX_GRID_POINTS,
};
use crate::error::CliError;
use crate::report::{self, Record};
use crate::rows::{DiagRow, EvalRow, SweepRow, VerifyRow, ZeroRow};
use crate::verify::{self, Suite};

/// Decades 10² … 10⁶ used by every preset.
pub const PRESET_N_LIST: [usize; 5] = [100, 1000, 10_000, 100_000, 1_000_000];

fn elapsed_ms(start: Instant, timing: bool) -> u64 {
    if timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    }
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::io(std::path::Path::new("<stdout>"), e)
}

/// Writes the rows to `--out`, or renders them on `out` when no file is given.
fn emit<R: Record>(rows: &[R], output: &OutputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let format = output.resolved_format();
    match &output.out {
        Some(path) => {
            report::write_file(path, rows, format)?;
            writeln!(out, "wrote {} rows to {}", rows.len(), path.display()).map_err(stdout_err)
        }
        None => out.write_all(&report::render(rows, format)?).map_err(stdout_err),
    }
}

/// Evaluates `what` at `s` and packs the result as a row.
pub fn eval_row(s: Complex64, what: What, timing: bool) -> Result<EvalRow, CliError> {
    check_t(s.im)?;
    let start = Instant::now();
    let (value, n_terms, method, error_estimate) = match what {
        What::Eta => {
            let e = eta_accelerated(s, zeta_lab::series::DEFAULT_TOL)?;
            (e.value, e.n_terms_used as u64, e.method.as_str(), Some(e.error_estimate))
        }
        What::Zeta => {
            let e = zeta(s)?;
            (e.value, e.n_terms_used as u64, e.method.as_str(), Some(e.error_estimate))
        }
        What::Gamma => (gamma_complex(s)?, 0, "lanczos", None),
        What::FunctionalResidual => (
            Complex64::new(functional_equation_residual(s)?, 0.0),
            0,
            "both-sides",
            None,
        ),
    };
    Ok(EvalRow {
        experiment_id: format!("eval-{}", what.name()),
        sigma: s.re,
        t: s.im,
        what: what.name().to_owned(),
        re: value.re,
        im: value.im,
        abs: value.norm(),
        n_terms,
        method: method.to_owned(),
        error_estimate,
        wall_time_ms: elapsed_ms(start, timing),
    })
}

pub fn eval(s: Complex64, what: What, output: &OutputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let row = eval_row(s, what, output.timing)?;
    let estimate = row
        .error_estimate
        .map_or(String::new(), |e| format!(", error <= {e:.1e}"));
    writeln!(
        out,
        "{}({}) = {} {} {}i  |value| = {}  [{}{}]",
        row.what,
        s,
        report::format_float(row.re),
        if row.im.is_sign_negative() { "-" } else { "+" },
        report::format_float(row.im.abs()),
        report::format_float(row.abs),
        row.method,
        estimate
    )
    .map_err(stdout_err)?;
    if let Some(path) = &output.out {
        report::append_file(path, &[row], output.resolved_format())?;
    }
    Ok(())
}

/// Ordinate of the first zero on the critical line.
pub fn first_zero_ordinate() -> Result<f64, CliError> {
    scan_zeros(10.0, 20.0, DEFAULT_SCAN_STEP)?
        .first()
        .map(|c| c.refined_t)
        .ok_or_else(|| CliError::Usage("no zero found in [10, 20]".into()))
}

pub fn diag_config(args: &DiagArgs, output: &OutputArgs) -> Result<(String, SweepConfig), CliError> {
    let preset = args.preset;
    let sigma_grid = match (&args.sigma_grid, preset) {
        (Some(spec), _) => parse_real_grid(spec)?,
        (None, Some(p)) => vec![p.sigma()],
        (None, None) => return Err(CliError::Usage("diag needs --preset or --sigma-grid".into())),
    };
    let t_values = match (&args.t, preset) {
        (Some(spec), _) => parse_real_grid(spec)?,
        (None, Some(_)) => vec![first_zero_ordinate()?],
        (None, None) => return Err(CliError::Usage("diag needs --preset or --t".into())),
    };
    let n_list = match (&args.n_list, preset) {
        (Some(spec), _) => parse_n_list(spec)?,
        (None, Some(_)) => PRESET_N_LIST.to_vec(),
        (None, None) => return Err(CliError::Usage("diag needs --preset or --n-list".into())),
    };
    let config = SweepConfig {
        sigma_grid,
        t_values,
        n_list,
        output_path: output.out.clone(),
        format: output.resolved_format(),
        seed: args.seed,
    };
    config.validate()?;
    let id = preset.map_or("diag", |p: Preset| p.name()).to_owned();
    Ok((id, config))
}

pub fn diag_rows(
    experiment_id: &str,
    config: &SweepConfig,
    brute: BrutePolicy,
    timing: bool,
) -> Result<Vec<DiagRow>, CliError> {
    let mut rows = Vec::new();
    for &sigma in &config.sigma_grid {
        for &t in &config.t_values {
            let start = Instant::now();
            let records = diagnostic_series(StripPoint::new(sigma, t), &config.n_list, brute)?;
            let ms = elapsed_ms(start, timing);
            rows.extend(records.into_iter().map(|r| DiagRow {
                experiment_id: experiment_id.to_owned(),
                sigma,
                t,
                n: r.n_terms as u64,
                p_n: r.power_sum,
                t_n: r.cross_term,
                s_n: r.combined_sum,
                eta_abs_sq: r.eta_abs_sq,
                identity_residual: r.identity_residual,
                extra: r.critical_gap(),
                wall_time_ms: ms,
            }));
        }
    }
    Ok(rows)
}

pub fn diag(args: &DiagArgs, output: &OutputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (id, config) = diag_config(args, output)?;
    let brute = if args.no_brute {
        BrutePolicy::Never
    } else {
        BrutePolicy::Auto
    };
    let rows = diag_rows(&id, &config, brute, output.timing)?;
    emit(&rows, output, out)
}

pub fn zeros_range(args: &ZerosArgs) -> Result<(f64, f64, f64), CliError> {
    let (lo, hi, step) = if args.range.is_empty() {
        match (&args.t_lo, &args.t_hi) {
            (Some(lo), Some(hi)) => (lo.as_str(), hi.as_str(), args.step.as_deref()),
            _ => return Err(CliError::Usage("zeros needs t_lo t_hi [step] or --t-lo/--t-hi".into())),
        }
    } else {
        if args.range.len() < 2 {
            return Err(CliError::Usage("zeros needs both t_lo and t_hi".into()));
        }
        if args.range.len() == 3 && args.step.is_some() {
            return Err(CliError::Usage("step given twice".into()));
        }
        let step = args.range.get(2).map(String::as_str).or(args.step.as_deref());
        (args.range[0].as_str(), args.range[1].as_str(), step)
    };
    let lo = check_t(parse_real(lo)?)?;
    let hi = check_t(parse_real(hi)?)?;
    let step = step.map(parse_real).transpose()?.unwrap_or(DEFAULT_SCAN_STEP);
    if !(lo > 0.0 && lo < hi) {
        return Err(CliError::Usage(format!("zeros needs 0 < t_lo < t_hi, got [{lo}, {hi}]")));
    }
    if !(step > 0.0) || (hi - lo) / step > MAX_GRID_POINTS as f64 {
        return Err(CliError::Usage(format!(
            "step must be positive and give at most {MAX_GRID_POINTS} grid points"
        )));
    }
    Ok((lo, hi, step))
}

pub fn zero_rows(lo: f64, hi: f64, step: f64, timing: bool) -> Result<Vec<ZeroRow>, CliError> {
    let start = Instant::now();
    let found = scan_zeros(lo, hi, step)?;
    let ms = elapsed_ms(start, timing);
    found
        .iter()
        .map(|cand| {
            let eq = verify_zero_equivalence(cand.point())?;
            let sym = check_symmetry(cand)?;
            Ok(ZeroRow {
                experiment_id: "zeros".to_owned(),
                t_lo: cand.bracket.0,
                t_hi: cand.bracket.1,
                refined_t: cand.refined_t,
                z_residual: cand.z_residual,
                eta_residual: cand.eta_residual,
                zeta_residual: cand.zeta_residual,
                iterations: cand.iterations as u64,
                factor_abs: factor_info(cand.point().s()).factor.norm(),
                verdict: eq.verdict.as_str().to_owned(),
                conjugate_residual: sym.conjugate_residual,
                reflection_residual: sym.reflection_residual,
                symmetric: sym.passes(),
                wall_time_ms: ms,
            })
        })
        .collect()
}

pub fn zeros(args: &ZerosArgs, output: &OutputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (lo, hi, step) = zeros_range(args)?;
    let rows = zero_rows(lo, hi, step, output.timing)?;
    emit(&rows, output, out)
}

pub fn sweep_rows(t: f64, n_list: &[usize], grid: &[f64], timing: bool) -> Result<Vec<SweepRow>, CliError> {
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage("N list must be strictly increasing".into()));
    }
    let mut rows = Vec::new();
    for &n in n_list {
        let start = Instant::now();
        let points = cross_term_sweep(grid, t, n)?;
        let ms = elapsed_ms(start, timing);
        for (i, p) in points.iter().enumerate() {
            let (delta_f, slope) = match i.checked_sub(1).map(|j| points[j]) {
                Some(prev) => {
                    let d = p.value - prev.value;
                    (Some(d), Some(d / (p.u - prev.u)))
                }
                None => (None, None),
            };
            rows.push(SweepRow {
                experiment_id: "sweep-u".to_owned(),
                t,
                n: n as u64,
                u: p.u,
                f_n: p.value,
                delta_f,
                slope,
                wall_time_ms: ms,
            });
        }
    }
    Ok(rows)
}

pub fn sweep_u(args: &SweepArgs, output: &OutputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let t = check_t(parse_real(&args.t)?)?;
    let n_list = parse_n_list(&args.n)?;
    let grid = parse_real_grid(&args.grid)?;
    if grid.len() * n_list.len() > MAX_GRID_POINTS {
        return Err(CliError::Usage(format!("sweep limited to {MAX_GRID_POINTS} rows")));
    }
    let rows = sweep_rows(t, &n_list, &grid, output.timing)?;
    emit(&rows, output, out)
}

pub fn verify(suite: Suite, seed: u64, output: &OutputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let checks = verify::run_suite(suite, seed)?;
    let (summary, ok) = verify::summarize(suite, &checks);
    out.write_all(summary.as_bytes()).map_err(stdout_err)?;
    if let Some(path) = &output.out {
        let rows: Vec<VerifyRow> = checks.into_iter().map(|c| c.row).collect();
        report::write_file(path, &rows, output.resolved_format())?;
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::Verify(format!("suite {} has failing checks", suite.name())))
    }
}
