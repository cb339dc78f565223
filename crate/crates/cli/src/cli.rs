use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, ColorChoice, Parser, Subcommand, ValueEnum};
use zeta_lab::Complex64;

use crate::report::Format;
use crate::verify::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "zeta-lab",
    version,
    about = "Eta and zeta series experiments in the critical strip",
    color = ColorChoice::Never
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format; defaults to the extension of --out, else csv.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Write rows to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Fill wall_time_ms with measured times (otherwise 0, for byte-stable output).
    #[arg(long, global = true)]
    pub timing: bool,
}

impl OutputArgs {
    pub fn resolved_format(&self) -> Format {
        self.format
            .or_else(|| self.out.as_deref().and_then(Format::from_path))
            .unwrap_or_default()
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate eta, zeta, gamma or the functional-equation residual at one point.
    Eval {
        /// Complex argument such as 2, 0.5+14.134725i or -1-2i.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Power sums, cross terms and the combined sum over (sigma, t, N).
    Diag(DiagArgs),
    /// Scan the critical line for zeros with the Hardy Z-function.
    Zeros(ZerosArgs),
    /// Tabulate F_N(u) = T_N at sigma = u over a grid in (0, 1).
    SweepU(SweepArgs),
    /// Run a seeded property suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Eta,
    Zeta,
    Gamma,
    FunctionalResidual,
}

impl What {
    pub fn name(&self) -> &'static str {
        match self {
            What::Eta => "eta",
            What::Zeta => "zeta",
            What::Gamma => "gamma",
            What::FunctionalResidual => "functional-residual",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// sigma = 1/2
    CaseCritical,
    /// sigma = 0.7
    CaseUpper,
    /// sigma = 0.3
    CaseLower,
}

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Preset::CaseCritical => "case-critical",
            Preset::CaseUpper => "case-upper",
            Preset::CaseLower => "case-lower",
        }
    }

    pub fn sigma(&self) -> f64 {
        match self {
            Preset::CaseCritical => 0.5,
            Preset::CaseUpper => 0.7,
            Preset::CaseLower => 0.3,
        }
    }
}

#[derive(Debug, Args)]
pub struct DiagArgs {
    /// Named case: sigma from the case, t at the first zero, N = 1e2..1e6.
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Comma list or lo:hi:step.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma_grid: Option<String>,
    /// Comma list or lo:hi:step.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Strictly increasing comma list, e.g. 100,1e3,1e4.
    #[arg(long)]
    pub n_list: Option<String>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Skip the O(N^2) cross-term path even for small N.
    #[arg(long)]
    pub no_brute: bool,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    /// t_lo t_hi [step]
    #[arg(num_args = 0..=3, allow_negative_numbers = true)]
    pub range: Vec<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "range")]
    pub t_lo: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "range")]
    pub t_hi: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub step: Option<String>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
    /// One N or a strictly increasing comma list.
    #[arg(long, alias = "n-list")]
    pub n: String,
    /// Comma list or lo:hi:step, every value in (0, 1).
    #[arg(long, allow_hyphen_values = true)]
    pub grid: String,
}

pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s = Complex64::from_str(text.trim())
        .map_err(|_| format!("not a complex number: {text:?} (expected e.g. 0.5+14.1i)"))?;
    if s.re.is_finite() && s.im.is_finite() {
        Ok(s)
    } else {
        Err(format!("complex argument must be finite, got {text:?}"))
    }
}
