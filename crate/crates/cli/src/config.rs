//! Grid specifications and the validated experiment configuration.

use std::path::PathBuf;

use crate::error::CliError;
use crate::report::Format;

/// Largest `|t|` the commands accept.
pub const MAX_ABS_T: f64 = 100.0;
/// Largest number of terms in any partial sum.
pub const MAX_TERMS: usize = 10_000_000;
/// Largest number of values a `lo:hi:step` grid may expand to.
pub const MAX_GRID_POINTS: usize = 100_000;

/// Parses `lo:hi:step` (inclusive of `hi` up to rounding) or a comma list.
pub fn parse_real_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(CliError::Usage("empty grid".into()));
    }
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [lo, hi, step] = parts[..] else {
            return Err(CliError::Usage(format!("range grid must be lo:hi:step, got {spec:?}")));
        };
        let (lo, hi, step) = (parse_real(lo)?, parse_real(hi)?, parse_real(step)?);
        if !(step > 0.0) || hi < lo {
            return Err(CliError::Usage(format!(
                "range grid needs lo <= hi and step > 0, got {spec:?}"
            )));
        }
        let span = (hi - lo) / step;
        if !(span < MAX_GRID_POINTS as f64) {
            return Err(CliError::Usage(format!(
                "grid {spec:?} has more than {MAX_GRID_POINTS} points"
            )));
        }
        let count = (span + 1e-9).floor() as usize + 1;
        Ok((0..count).map(|i| lo + i as f64 * step).collect())
    } else {
        spec.split(',').map(parse_real).collect()
    }
}

pub fn parse_real(text: &str) -> Result<f64, CliError> {
    let text = text.trim();
    match text.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(CliError::Usage(format!("expected a finite number, got {text:?}"))),
    }
}

/// Parses a comma list of term counts; `1e6` style is accepted for exact
/// integers.
pub fn parse_n_list(spec: &str) -> Result<Vec<usize>, CliError> {
    spec.split(',').map(parse_n).collect()
}

pub fn parse_n(text: &str) -> Result<usize, CliError> {
    let text = text.trim();
    let bad = || CliError::Usage(format!("expected a term count, got {text:?}"));
    let n = match text.parse::<u64>() {
        Ok(n) => n,
        Err(_) => {
            let x: f64 = text.parse().map_err(|_| bad())?;
            if !(x >= 0.0 && x.fract() == 0.0 && x <= u64::MAX as f64) {
                return Err(bad());
            }
            x as u64
        }
    };
    if n == 0 || n > MAX_TERMS as u64 {
        return Err(CliError::Usage(format!(
            "term counts must lie in [1, {MAX_TERMS}], got {text}"
        )));
    }
    Ok(n as usize)
}

pub fn check_t(t: f64) -> Result<f64, CliError> {
    if t.is_finite() && t.abs() <= MAX_ABS_T {
        Ok(t)
    } else {
        Err(CliError::Usage(format!("|t| must be at most {MAX_ABS_T}, got {t}")))
    }
}

/// Inputs of the `diag` experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub sigma_grid: Vec<f64>,
    pub t_values: Vec<f64>,
    pub n_list: Vec<usize>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.sigma_grid.is_empty() || self.t_values.is_empty() || self.n_list.is_empty() {
            return Err(CliError::Usage("sigma grid, t values and N list must be non-empty".into()));
        }
        if let Some(s) = self.sigma_grid.iter().find(|s| !(**s > 0.0 && **s < 1.0)) {
            return Err(CliError::Usage(format!("sigma must lie in (0, 1), got {s}")));
        }
        for &t in &self.t_values {
            check_t(t)?;
        }
        if self.n_list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CliError::Usage("N list must be strictly increasing".into()));
        }
        if let Some(n) = self.n_list.iter().find(|n| **n == 0 || **n > MAX_TERMS) {
            return Err(CliError::Usage(format!("N must lie in [1, {MAX_TERMS}], got {n}")));
        }
        let rows = self.sigma_grid.len() * self.t_values.len() * self.n_list.len();
        if rows > MAX_GRID_POINTS {
            return Err(CliError::Usage(format!("{rows} rows requested, limit is {MAX_GRID_POINTS}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_grid_includes_upper_end() {
        let g = parse_real_grid("0.1:0.9:0.1").unwrap();
        assert_eq!(g.len(), 9);
        assert!((g[8] - 0.9).abs() < 1e-12);
        assert_eq!(parse_real_grid("0.5").unwrap(), vec![0.5]);
        assert_eq!(parse_real_grid("0.3, 0.7").unwrap(), vec![0.3, 0.7]);
    }

    #[test]
    fn grid_errors() {
        for bad in ["", "a", "0.1:0.2", "0.5:0.1:0.1", "0:1:0", "0:1:-1", "0:1:1e-9", "nan", "1,,2"] {
            assert!(parse_real_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn n_parsing() {
        assert_eq!(parse_n_list("100,1e3,10000").unwrap(), vec![100, 1000, 10_000]);
        assert!(parse_n("0").is_err());
        assert!(parse_n("1.5").is_err());
        assert!(parse_n("1e8").is_err());
        assert!(parse_n("-3").is_err());
    }

    #[test]
    fn config_validation() {
        let good = SweepConfig {
            sigma_grid: vec![0.5],
            t_values: vec![14.0],
            n_list: vec![10, 100],
            output_path: None,
            format: Format::Csv,
            seed: 42,
        };
        assert!(good.validate().is_ok());
        let mut bad = good.clone();
        bad.n_list = vec![100, 10];
        assert!(bad.validate().is_err());
        let mut bad = good.clone();
        bad.sigma_grid.clear();
        assert!(bad.validate().is_err());
        let mut bad = good;
        bad.t_values = vec![500.0];
        assert!(bad.validate().is_err());
    }
}
