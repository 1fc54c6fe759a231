//! Continuum Airy function Ai(x) for real x.

use std::f64::consts::PI;

use num::complex::Complex64;

use super::gamma::gamma;
use super::hyper::sum_series;
use super::tricomi::tricomi_u;
use crate::error::Result;
use crate::quad::{integrate_breakpoints, QuadBudget};

/// `1/(3^{2/3} Γ(2/3))` and `1/(3^{1/3} Γ(1/3))`.
pub(crate) fn airy_constants() -> (f64, f64) {
    let c1 = 1.0 / (3f64.powf(2.0 / 3.0) * gamma(2.0 / 3.0).unwrap_or(f64::NAN));
    let c2 = 1.0 / (3f64.cbrt() * gamma(1.0 / 3.0).unwrap_or(f64::NAN));
    (c1, c2)
}

fn hyp0f1(b: f64, z: f64) -> Result<f64> {
    sum_series(|k, t| t * (z / ((b + k as f64) * (k as f64 + 1.0))), 1e-17).map(|s| s.re)
}

/// `c₁ ₀F₁(;2/3;x³/9) − c₂ x ₀F₁(;4/3;x³/9)`.
pub fn airy_ai_series(x: f64) -> Result<f64> {
    let (c1, c2) = airy_constants();
    let z = x * x * x / 9.0;
    Ok(c1 * hyp0f1(2.0 / 3.0, z)? - c2 * x * hyp0f1(4.0 / 3.0, z)?)
}

/// `Re(e^{iπ/6}/π ∫₀^∞ e^{−r³/3} e^{ixr e^{iπ/6}} dr)`: the defining
/// oscillatory integral with the contour rotated onto the ray arg s = π/6.
pub(crate) fn airy_ai_contour(x: f64) -> Result<f64> {
    let rot = Complex64::from_polar(1.0, PI / 6.0);
    let i = Complex64::new(0.0, 1.0);
    // e^{−r³/3} times the growth e^{|x| r/2} peaks near √(|x|/2).
    let upper = 6.0 + 2.0 * x.abs().sqrt();
    let f = |r: f64| (-r * r * r / 3.0 + i * x * r * rot).exp();
    let points: Vec<f64> = (0..=8).map(|k| upper * k as f64 / 8.0).collect();
    let q = integrate_breakpoints(f, &points, QuadBudget::with_tol(1e-14, 1e-13))?;
    Ok((rot * q.value).re / PI)
}

/// Ai(x) for real x.
///
/// |x| < 2 uses the two-₀F₁ combination; larger positive x uses
/// `Ai(x) = √(x/(3π)) (2ζ)^{1/3} e^{−ζ} U(5/6, 5/3, 2ζ)`, ζ = (2/3)x^{3/2},
/// which keeps relative accuracy in the decaying tail; x ≤ −2 uses the
/// rotated contour integral, free of the series' cancellation.
pub fn airy_ai_ref(x: f64) -> Result<f64> {
    if x.abs() < 2.0 {
        return airy_ai_series(x);
    }
    if x > 0.0 {
        let zeta = 2.0 / 3.0 * x.powf(1.5);
        let u = tricomi_u(5.0 / 6.0, 5.0 / 3.0, 2.0 * zeta)?;
        return Ok((x / (3.0 * PI)).sqrt() * (2.0 * zeta).cbrt() * (-zeta).exp() * u);
    }
    airy_ai_contour(x)
}
