//! Umbral plane waves on a spacetime lattice: time spacing a, space spacing b.

use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};
use crate::umbral_core::{umbral_exp, Number};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WaveParams {
    pub omega: f64,
    pub k: f64,
    pub a: f64,
    pub b: f64,
}

impl WaveParams {
    pub fn new(omega: f64, k: f64, a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0) {
            return Err(UmbraError::Lattice(format!(
                "spacings must be positive, got a = {a}, b = {b}"
            )));
        }
        Ok(WaveParams { omega, k, a, b })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseConvention {
    /// `(ω/k) a·arcsin(b) / (b·arcsin(a))`.
    #[default]
    Arcsin,
    /// `(arctan(ωa)/a) / (arctan(kb)/b)`, the phase rates of the umbral
    /// exponentials themselves.
    Arctan,
}

/// `F = (1+iωa)^{t/a} (1−ikb)^{x/b}`.
pub fn plane_wave(params: &WaveParams, x: &Number, t: &Number) -> Result<Number> {
    let time = umbral_exp(&Number::complex(0.0, params.omega), t, &Number::real(params.a))?;
    let space = umbral_exp(&Number::complex(0.0, -params.k), x, &Number::real(params.b))?;
    Ok(&time * &space)
}

fn check_arcsin(v: f64, name: &str) -> Result<()> {
    if v.abs() > 1.0 {
        return Err(UmbraError::Domain(format!("arcsin needs |{name}| ≤ 1, got {v}")));
    }
    Ok(())
}

/// `(b·arcsin(a)) / (a·arcsin(b))`.
pub fn refraction_index(params: &WaveParams) -> Result<f64> {
    check_arcsin(params.a, "a")?;
    check_arcsin(params.b, "b")?;
    Ok((params.b * params.a.asin()) / (params.a * params.b.asin()))
}

pub fn phase_velocity(params: &WaveParams, convention: PhaseConvention) -> Result<f64> {
    if params.k == 0.0 {
        return Err(UmbraError::Domain("zero wavenumber".into()));
    }
    match convention {
        PhaseConvention::Arcsin => Ok(params.omega / params.k / refraction_index(params)?),
        PhaseConvention::Arctan => {
            let time = (params.omega * params.a).atan() / params.a;
            let space = (params.k * params.b).atan() / params.b;
            Ok(time / space)
        }
    }
}
