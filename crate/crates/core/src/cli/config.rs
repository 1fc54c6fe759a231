//! Run configuration shared by the TOML file and the command line.
//!
//! Every field is optional so that a file, the flags and the built-in
//! defaults can be layered with [`RunConfig::merge`].

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use super::parse::RangeSpec;
use crate::error::{Result, UmbraError};
use crate::umbral_core::Number;
use crate::verify::TolProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Eval,
    Map,
    Verify,
    Toda,
    Oscillator,
    Wave,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Eval => "eval",
            Command::Map => "map",
            Command::Verify => "verify",
            Command::Toda => "toda",
            Command::Oscillator => "oscillator",
            Command::Wave => "wave",
        }
    }

    fn default_format(self) -> Format {
        match self {
            Command::Eval | Command::Oscillator | Command::Wave => Format::Csv,
            Command::Map | Command::Verify | Command::Toda => Format::Json,
        }
    }
}

/// Function families `eval` can tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    UmbralExp,
    UmbralTrig,
    UmAiry,
    UmGaussian,
    UmWhittakerM,
    WhittakerA2,
    WhittakerHalf,
    InverseSquare,
    Delta,
    Geometric,
    Airy,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::UmbralExp,
        Family::UmbralTrig,
        Family::UmAiry,
        Family::UmGaussian,
        Family::UmWhittakerM,
        Family::WhittakerA2,
        Family::WhittakerHalf,
        Family::InverseSquare,
        Family::Delta,
        Family::Geometric,
        Family::Airy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::UmbralExp => "umbral-exp",
            Family::UmbralTrig => "umbral-trig",
            Family::UmAiry => "um-airy",
            Family::UmGaussian => "um-gaussian",
            Family::UmWhittakerM => "um-whittaker-m",
            Family::WhittakerA2 => "whittaker-a2",
            Family::WhittakerHalf => "whittaker-half",
            Family::InverseSquare => "inverse-square",
            Family::Delta => "delta",
            Family::Geometric => "geometric",
            Family::Airy => "airy",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = UmbraError;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| UmbraError::Parse(format!("unknown family '{s}'")))
    }
}

/// Evaluation route for families that have more than one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Series,
    Quadrature,
    UIdentity,
    Both,
}

impl FromStr for Method {
    type Err = UmbraError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('_', "-").as_str() {
            "series" => Ok(Method::Series),
            "quadrature" => Ok(Method::Quadrature),
            "u-identity" => Ok(Method::UIdentity),
            "both" => Ok(Method::Both),
            _ => Err(UmbraError::Parse(format!("unknown method '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = UmbraError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(UmbraError::Parse(format!("unknown format '{s}'"))),
        }
    }
}

/// All run parameters. `None` means "not given here".
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<Command>,
    pub family: Option<Family>,
    pub method: Option<Method>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,

    /// Lattice spacing (time step for `toda` and `wave`).
    pub a: Option<Number>,
    /// Spatial spacing for `wave`.
    pub b: Option<Number>,
    pub x: Option<RangeSpec>,
    pub t: Option<RangeSpec>,

    pub lambda: Option<Number>,
    pub kappa: Option<Number>,
    pub mu: Option<Number>,
    pub c1: Option<Complex64>,
    pub c2: Option<Complex64>,

    pub numerator: Option<Vec<Number>>,
    pub denominator: Option<Vec<Number>>,
    /// Coefficient `c` of `c·x^k` inside the hypergeometric function.
    pub argument: Option<Number>,
    pub k: Option<u32>,
    pub gamma_exp: Option<Number>,
    pub lambda_exp: Option<Number>,

    pub n: Option<RangeSpec>,
    pub m: Option<RangeSpec>,
    pub q0: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub branch: Option<i8>,
    /// Also tabulate the continuum profile at these times.
    pub continuum_t: Option<RangeSpec>,

    pub x0: Option<Number>,
    pub p0: Option<Number>,
    pub steps: Option<usize>,

    pub omega: Option<f64>,
    pub wavenumber: Option<f64>,

    pub suite: Option<String>,
    pub tol_profile: Option<TolProfile>,
    pub exact: Option<bool>,
    pub points: Option<usize>,
    pub tol: Option<f64>,
}

macro_rules! overlay {
    ($base:ident, $top:ident; $($f:ident),* $(,)?) => {
        RunConfig { $($f: $top.$f.or($base.$f)),* }
    };
}

impl RunConfig {
    /// Fields set in `top` win over fields set in `self`.
    pub fn merge(self, top: RunConfig) -> RunConfig {
        let base = self;
        overlay!(base, top;
            command, family, method, format, output, a, b, x, t, lambda, kappa, mu, c1, c2,
            numerator, denominator, argument, k, gamma_exp, lambda_exp, n, m, q0, alpha, beta,
            branch, continuum_t, x0, p0, steps, omega, wavenumber, suite, tol_profile, exact,
            points, tol,
        )
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| UmbraError::Parse(format!("config: {}", e.message())))
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| UmbraError::Parse(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UmbraError::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn command(&self) -> Result<Command> {
        self.command.ok_or_else(|| UmbraError::Parse("no command given".into()))
    }

    pub fn format(&self) -> Result<Format> {
        Ok(self.format.unwrap_or(self.command()?.default_format()))
    }

    pub fn spacing(&self) -> Number {
        self.a.clone().unwrap_or_else(Number::one)
    }

    pub fn kappa(&self) -> Number {
        self.kappa.clone().unwrap_or_else(Number::one)
    }

    pub fn mu(&self) -> Number {
        self.mu.clone().unwrap_or_else(|| Number::ratio(1, 2))
    }

    pub fn lambda(&self) -> Number {
        self.lambda.clone().unwrap_or_else(Number::one)
    }

    pub fn c1(&self) -> Complex64 {
        self.c1.unwrap_or(Complex64::new(1.0, 0.0))
    }

    pub fn c2(&self) -> Complex64 {
        self.c2.unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn tol(&self) -> f64 {
        self.tol.unwrap_or(1e-12)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toml_round_trip() {
        let cfg = RunConfig {
            command: Some(Command::Eval),
            family: Some(Family::UmAiry),
            method: Some(Method::Both),
            a: Some(Number::ratio(1, 2)),
            x: Some("0:3".parse().unwrap()),
            c2: Some(Complex64::new(0.0, 0.5)),
            numerator: Some(vec![Number::ratio(1, 3), Number::real(0.25)]),
            tol_profile: Some(TolProfile::Strict),
            ..Default::default()
        };
        let text = cfg.to_toml().unwrap();
        assert_eq!(RunConfig::from_toml(&text).unwrap(), cfg);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(RunConfig::from_toml("spacing = 1").is_err());
        assert!(RunConfig::from_toml("family = \"nope\"").is_err());
    }

    #[test]
    fn precedence() {
        let file = RunConfig::from_toml("a = \"1/2\"\nkappa = 3\nfamily = \"um-airy\"").unwrap();
        let flags = RunConfig {
            kappa: Some(Number::int(5)),
            ..Default::default()
        };
        let merged = file.merge(flags);
        assert_eq!(merged.kappa(), Number::int(5));
        assert_eq!(merged.spacing(), Number::ratio(1, 2));
        assert_eq!(merged.family, Some(Family::UmAiry));
        assert_eq!(merged.mu(), Number::ratio(1, 2));
        assert_eq!(RunConfig::default().spacing(), Number::one());
    }

    #[test]
    fn names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("u_identity".parse::<Method>().unwrap(), Method::UIdentity);
    }
}
