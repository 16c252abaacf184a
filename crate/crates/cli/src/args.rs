use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hker_core::specfun::ToleranceSpec;
use hker_core::Scalar;

use crate::{CliError, TOL_ENV};

#[derive(Debug, Parser)]
#[command(name = "hker", version, about = "Humbert phi2/Psi2 evaluation and identity checks")]
pub struct Cli {
    /// Output format (eval and check default to json, table to csv).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Cap on series terms (diagonals for double series).
    #[arg(long = "max-terms", global = true)]
    pub max_terms: Option<usize>,

    /// Worker threads for identity sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function at one point.
    Eval(EvalArgs),
    /// Run identity sweeps ("all" runs every registered identity).
    Check(CheckArgs),
    /// Tabulate a function along one swept variable.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Phi2,
    Psi2,
    #[value(name = "2f1")]
    Hyp2f1,
    #[value(name = "1f1")]
    Hyp1f1,
    #[value(name = "1f2")]
    Hyp1f2,
    #[value(name = "0f1")]
    Hyp0f1,
}

impl Function {
    pub fn name(&self) -> &'static str {
        match self {
            Function::Phi2 => "phi2",
            Function::Psi2 => "psi2",
            Function::Hyp2f1 => "2f1",
            Function::Hyp1f1 => "1f1",
            Function::Hyp1f2 => "1f2",
            Function::Hyp0f1 => "0f1",
        }
    }

    /// Names of the inputs the function takes, in display order.
    pub fn arity(&self) -> &'static [&'static str] {
        match self {
            Function::Phi2 | Function::Psi2 => &["a", "b", "c", "x", "y"],
            Function::Hyp2f1 | Function::Hyp1f2 => &["a", "b", "c", "z"],
            Function::Hyp1f1 => &["a", "b", "z"],
            Function::Hyp0f1 => &["b", "z"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    #[value(name = "f21-series")]
    F21Series,
    Auto,
    Closed,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::F21Series => "f21-series",
            Method::Auto => "auto",
            Method::Closed => "closed",
        }
    }
}

/// `re` or `re,im`.
pub fn parse_scalar(s: &str) -> Result<Scalar, String> {
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("invalid number {t:?}"));
    let z = match s.split_once(',') {
        Some((re, im)) => Scalar::new(parse(re)?, parse(im)?),
        None => Scalar::new(parse(s)?, 0.0),
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("non-finite value {s:?}"))
    }
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
    pub a: Option<Scalar>,
    #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
    pub b: Option<Scalar>,
    #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
    pub c: Option<Scalar>,
    #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
    pub x: Option<Scalar>,
    #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
    pub y: Option<Scalar>,
    #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
    pub z: Option<Scalar>,
}

impl PointArgs {
    pub fn get(&self, name: &str) -> Option<Scalar> {
        match name {
            "a" => self.a,
            "b" => self.b,
            "c" => self.c,
            "x" => self.x,
            "y" => self.y,
            "z" => self.z,
            _ => None,
        }
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub function: Function,
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: Method,
    /// Relative tolerance for series truncation.
    #[arg(long, allow_hyphen_values = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Identity name, or "all".
    pub identity: String,
    /// Samples per identity (default: the identity's own default).
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Relative-error threshold (default: the identity's own default).
    #[arg(long, allow_hyphen_values = true)]
    pub tol: Option<f64>,
    /// Interval overrides, e.g. `a=0.1:2,c=0.6:4`.
    #[arg(long, allow_hyphen_values = true)]
    pub domain: Option<String>,
    /// Sample small imaginary parts (|Im| <= 0.5).
    #[arg(long)]
    pub complex: bool,
    #[arg(long = "exclusion-radius")]
    pub exclusion_radius: Option<f64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub function: Function,
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long = "x-from", allow_hyphen_values = true)]
    pub x_from: Option<f64>,
    #[arg(long = "x-to", allow_hyphen_values = true)]
    pub x_to: Option<f64>,
    #[arg(long = "y-from", allow_hyphen_values = true)]
    pub y_from: Option<f64>,
    #[arg(long = "y-to", allow_hyphen_values = true)]
    pub y_to: Option<f64>,
    #[arg(long = "z-from", allow_hyphen_values = true)]
    pub z_from: Option<f64>,
    #[arg(long = "z-to", allow_hyphen_values = true)]
    pub z_to: Option<f64>,
    /// Tie y to the swept x.
    #[arg(long = "y-eq-x")]
    pub y_eq_x: bool,
    /// Tie y to minus the swept x.
    #[arg(long = "y-eq-neg-x")]
    pub y_eq_neg_x: bool,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: Method,
    #[arg(long, allow_hyphen_values = true)]
    pub tol: Option<f64>,
}

/// Series tolerance from `--tol`, then `HKER_DEFAULT_TOL`, then the default.
pub fn series_tolerance(tol: Option<f64>, max_terms: Option<usize>) -> Result<ToleranceSpec, CliError> {
    let mut spec = ToleranceSpec::default();
    let from_env = match std::env::var(TOL_ENV) {
        Ok(s) => Some(
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::invalid("invalid_tolerance", format!("{TOL_ENV} is not a number: {s:?}")))?,
        ),
        Err(_) => None,
    };
    if let Some(rel) = tol.or(from_env) {
        spec = spec.with_rel_tol(rel)?;
    }
    if let Some(m) = max_terms {
        spec = spec.with_max_terms(m)?;
    }
    Ok(spec)
}
