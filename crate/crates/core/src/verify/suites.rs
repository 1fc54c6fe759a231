//! Named residual suites: each builds a solution grid from
//! [`solutions`](crate::solutions) and applies its difference equation.

use std::fmt;
use std::str::FromStr;

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use super::operator::{apply_operator, DifferenceOperatorSpec, ResidualReport};
use crate::error::{Result, UmbraError};
use crate::quad::QuadBudget;
use crate::solutions::{
    inverse_square_closed, inverse_square_ratio, oscillator_grid, plane_wave, um_airy_quadrature, um_airy_series_parts,
    um_gaussian_series, um_gaussian_u, um_whittaker_m, whittaker_half_closed, OscillatorState, WaveParams,
};
use crate::specfun::airy_constants;
use crate::umbral_core::{GridFunction, Lattice, Number};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Oscillator,
    WhittakerHalf,
    InverseSquare,
    WhittakerGeneral,
    Airy,
    GaussianFirstOrder,
    PlaneWave,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Oscillator,
        Suite::WhittakerHalf,
        Suite::InverseSquare,
        Suite::WhittakerGeneral,
        Suite::Airy,
        Suite::GaussianFirstOrder,
        Suite::PlaneWave,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oscillator => "oscillator",
            Suite::WhittakerHalf => "whittaker_half",
            Suite::InverseSquare => "inverse_square",
            Suite::WhittakerGeneral => "whittaker_general",
            Suite::Airy => "airy",
            Suite::GaussianFirstOrder => "gaussian_first_order",
            Suite::PlaneWave => "plane_wave",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = UmbraError;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('-', "_");
        Suite::ALL
            .into_iter()
            .find(|v| v.name() == key)
            .ok_or_else(|| UmbraError::Parse(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TolProfile {
    #[default]
    Default,
    Strict,
    Loose,
}

impl TolProfile {
    fn scale(self) -> f64 {
        match self {
            TolProfile::Default => 1.0,
            TolProfile::Strict => 0.1,
            TolProfile::Loose => 100.0,
        }
    }
}

impl FromStr for TolProfile {
    type Err = UmbraError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "default" => Ok(TolProfile::Default),
            "strict" => Ok(TolProfile::Strict),
            "loose" => Ok(TolProfile::Loose),
            other => Err(UmbraError::Parse(format!("unknown tolerance profile '{other}'"))),
        }
    }
}

/// How a suite's residual is judged.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Bound {
    /// Every residual sample is an exact zero.
    ExactZero,
    Absolute(f64),
    /// Against `max_abs / max |F|`.
    Relative(f64),
}

/// Overrides for the suite defaults. Unset fields take each suite's
/// reference parameters.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub profile: TolProfile,
    pub a: Option<Number>,
    pub kappa: Option<f64>,
    pub mu: Option<f64>,
    pub points: Option<usize>,
    /// Exact rational arithmetic where the suite supports it (default on).
    pub exact: Option<bool>,
}

impl SuiteConfig {
    fn exact(&self) -> bool {
        self.exact.unwrap_or(true)
    }

    fn spacing(&self, default: Number) -> Number {
        let a = self.a.clone().unwrap_or(default);
        if self.exact() {
            a
        } else {
            a.to_float()
        }
    }

    fn points(&self, default: usize) -> usize {
        self.points.unwrap_or(default)
    }
}

/// A suite's report together with the bound it was judged against.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub bound: Bound,
    pub passed: bool,
    pub report: ResidualReport,
}

fn grid(a: &Number, origin: Number, len: usize, f: impl FnMut(&Number) -> Result<Number>) -> Result<GridFunction> {
    GridFunction::sample(Lattice::new(a.clone())?, origin, len, f)
}

fn residual(op: &DifferenceOperatorSpec, f: &GridFunction) -> Result<ResidualReport> {
    Ok(ResidualReport::from_residual(&apply_operator(op, f)?, f))
}

/// `Δ²X + X` on the X(t) grid from (X₀, P₀) = (1, 0).
fn oscillator(cfg: &SuiteConfig) -> Result<ResidualReport> {
    let a = cfg.spacing(Number::one());
    let one = if cfg.exact() { Number::one() } else { Number::real(1.0) };
    let state = OscillatorState::new(one, Number::zero(), a);
    let (x, _) = oscillator_grid(&state, cfg.points(100))?;
    let op = DifferenceOperatorSpec::new()
        .constant(Number::one(), 0, 2)
        .constant(Number::one(), 0, 0);
    residual(&op, &x)
}

/// `Δ²Y + κ/(x+a) Y(x+a) − Y/4` at spacing 2 on the odd chain x = 1, 3, …,
/// with the closed form (C₁, C₂) = (1, i/2).
fn whittaker_half(cfg: &SuiteConfig) -> Result<ResidualReport> {
    let kappa = cfg.kappa.unwrap_or(2.0);
    let a = Number::int(2);
    let (c1, c2) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.5));
    let f = grid(&a, Number::one(), cfg.points(21) + 2, |x| {
        Ok(Number::Complex(whittaker_half_closed(kappa, x.to_f64(), c1, c2)))
    })?;
    let op = DifferenceOperatorSpec::new()
        .constant(Number::one(), 0, 2)
        .term(move |x| Number::real(kappa / (x.to_f64() + 2.0)), 1, 0)
        .constant(Number::real(-0.25), 0, 0);
    residual(&op, &f)
}

/// `Y(x+a) − r(x) Y(x)` with the inverse-square ratio, closed form
/// (C₁, C₂) = (1, 0.3i), κ = 3/16.
fn inverse_square(cfg: &SuiteConfig) -> Result<ResidualReport> {
    let kappa = cfg.kappa.unwrap_or(3.0 / 16.0);
    let a = cfg.spacing(Number::one()).to_float();
    let av = a.to_f64();
    let (c1, c2) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.3));
    let f = grid(&a, a.clone(), cfg.points(20) + 1, |x| {
        inverse_square_closed(kappa, av, x.to_f64(), c1, c2).map(Number::Complex)
    })?;
    let ratio = inverse_square_ratio(Number::real(kappa), a);
    let op = DifferenceOperatorSpec::new().constant(Number::one(), 1, 0).term(
        move |x| -ratio(x).unwrap_or(Number::Real(f64::NAN)),
        0,
        0,
    );
    residual(&op, &f)
}

/// The umbral Whittaker equation (multiplied through by (x+a)(x+2a)) on
/// `um_whittaker_m`:
/// `(x+a)(x+2a)(Δ²Y − Y/4) + κ(x+2a)Y(x+a) + (1/4−μ²)Y(x+2a)`.
fn whittaker_general(cfg: &SuiteConfig) -> Result<ResidualReport> {
    let (kappa, mu) = (cfg.kappa.unwrap_or(0.7), cfg.mu.unwrap_or(0.3));
    let a = cfg.spacing(Number::ratio(3, 5)).to_float();
    let av = a.to_f64();
    let f = grid(&a, Number::real(0.25), cfg.points(20) + 2, |x| {
        um_whittaker_m(kappa, mu, x.to_f64(), av).map(Number::Real)
    })?;
    let quad = move |x: &Number| {
        let x = x.to_f64();
        (x + av) * (x + 2.0 * av)
    };
    let op = DifferenceOperatorSpec::new()
        .term(move |x| Number::real(quad(x)), 0, 2)
        .term(move |x| Number::real(-quad(x) / 4.0), 0, 0)
        .term(move |x| Number::real(kappa * (x.to_f64() + 2.0 * av)), 1, 0)
        .constant(Number::real(0.25 - mu * mu), 2, 0);
    residual(&op, &f)
}

/// `Δ²Y(x+a) − (x+a) Y(x)`, the umbral Airy equation, on x/a = 0..points.
/// Exact mode checks the two terminating series parts in rational
/// arithmetic; float mode checks the quadrature.
fn airy(cfg: &SuiteConfig) -> Result<ResidualReport> {
    let a = cfg.spacing(Number::ratio(1, 2));
    let len = cfg.points(6) + 4;
    let op_a = a.clone();
    let op = DifferenceOperatorSpec::new()
        .constant(Number::one(), 1, 2)
        .term(move |x| -(x + &op_a), 0, 0);
    if cfg.exact() && a.is_exact() {
        let parts = (0..len as i64)
            .map(|n| um_airy_series_parts(&(&Number::int(n) * &a), &a))
            .collect::<Result<Vec<_>>>()?;
        let lat = Lattice::new(a.clone())?;
        let p1 = GridFunction::new(lat.clone(), Number::zero(), parts.iter().map(|p| p.0.clone()).collect());
        let p2 = GridFunction::new(lat, Number::zero(), parts.iter().map(|p| p.1.clone()).collect());
        let (r1, r2) = (apply_operator(&op, &p1)?, apply_operator(&op, &p2)?);
        let (c1, c2) = airy_constants();
        let y = p1.map(|v| Number::real(c1 * v.to_f64()));
        let per_point = r1
            .samples()
            .iter()
            .zip(r2.samples())
            .map(|(u, v)| (c1 * u.to_f64() - c2 * v.to_f64()).abs())
            .collect();
        let exact_zero = r1
            .samples()
            .iter()
            .chain(r2.samples())
            .all(|v| v.is_exact() && v.is_zero());
        let scale = y.samples().iter().map(Number::abs).fold(0.0, f64::max);
        return Ok(ResidualReport::from_parts(per_point, scale, exact_zero));
    }
    let av = a.to_f64();
    let f = grid(&a.to_float(), Number::real(0.0), len, |x| {
        um_airy_quadrature(x.to_f64(), av, QuadBudget::with_tol(1e-14, 1e-12)).map(Number::Real)
    })?;
    residual(&op, &f)
}

/// `ΔG(x+a) + 2(x+a) G(x)`: the image of `y′ = −2xy`.
fn gaussian_first_order(cfg: &SuiteConfig) -> Result<ResidualReport> {
    let a = cfg.spacing(Number::ratio(1, 2));
    let len = cfg.points(16) + 2;
    let f = if cfg.exact() && a.is_exact() {
        grid(&a, Number::zero(), len, |x| um_gaussian_series(x, &a))?
    } else {
        let av = a.to_f64();
        grid(&a.to_float(), Number::real(0.0), len, |x| {
            um_gaussian_u(x.to_f64(), av).map(Number::Real)
        })?
    };
    let op_a = a.clone();
    let op =
        DifferenceOperatorSpec::new()
            .constant(Number::one(), 1, 1)
            .term(move |x| &Number::int(2) * &(x + &op_a), 0, 0);
    residual(&op, &f)
}

/// `(Δ_x² − Δ_t²)F` for ω = k = 1, a = b = 1/2 on a points × points grid.
fn plane_wave_suite(cfg: &SuiteConfig) -> Result<ResidualReport> {
    let h = cfg.spacing(Number::ratio(1, 2)).to_f64();
    let params = WaveParams::new(1.0, 1.0, h, h)?;
    let n = cfg.points(6);
    let f = |i: usize, j: usize| -> Result<Complex64> {
        Ok(plane_wave(&params, &Number::real(h * i as f64), &Number::real(h * j as f64))?.to_complex())
    };
    let mut per_point = Vec::with_capacity(n * n);
    let mut scale = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let dxx = (f(i + 2, j)? - f(i + 1, j)? * 2.0 + f(i, j)?) / (h * h);
            let dtt = (f(i, j + 2)? - f(i, j + 1)? * 2.0 + f(i, j)?) / (h * h);
            per_point.push((dxx - dtt).norm());
            scale = scale.max(f(i, j)?.norm());
        }
    }
    Ok(ResidualReport::from_parts(per_point, scale, false))
}

/// Builds the named solution grid and returns its residual under the
/// matching difference equation.
pub fn residual_suite(suite: Suite, config: &SuiteConfig) -> Result<ResidualReport> {
    match suite {
        Suite::Oscillator => oscillator(config),
        Suite::WhittakerHalf => whittaker_half(config),
        Suite::InverseSquare => inverse_square(config),
        Suite::WhittakerGeneral => whittaker_general(config),
        Suite::Airy => airy(config),
        Suite::GaussianFirstOrder => gaussian_first_order(config),
        Suite::PlaneWave => plane_wave_suite(config),
    }
}

/// The bound a suite is held to under `config`.
pub fn suite_bound(suite: Suite, config: &SuiteConfig) -> Bound {
    let exact = config.exact() && config.a.as_ref().is_none_or(Number::is_exact);
    let s = config.profile.scale();
    match suite {
        Suite::Oscillator | Suite::GaussianFirstOrder if exact => Bound::ExactZero,
        Suite::Oscillator => Bound::Relative(1e-12 * s),
        Suite::GaussianFirstOrder => Bound::Absolute(1e-10 * s),
        Suite::WhittakerHalf => Bound::Absolute(1e-10 * s),
        Suite::InverseSquare => Bound::Relative(1e-12 * s),
        Suite::WhittakerGeneral => Bound::Relative(1e-10 * s),
        Suite::Airy if exact => Bound::ExactZero,
        Suite::Airy => Bound::Absolute(1e-6 * s),
        Suite::PlaneWave => Bound::Absolute(1e-12 * s),
    }
}

pub fn check(bound: Bound, report: &ResidualReport) -> bool {
    match bound {
        Bound::ExactZero => report.exact_zero,
        Bound::Absolute(b) => report.max_abs <= b,
        Bound::Relative(b) => report.relative() <= b,
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteOutcome> {
    let report = residual_suite(suite, config)?;
    let bound = suite_bound(suite, config);
    Ok(SuiteOutcome {
        suite,
        bound,
        passed: check(bound, &report),
        report,
    })
}
