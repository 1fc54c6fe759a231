//! One-term recursions `Y(x + h) = r(x) Y(x)` and their gamma-function
//! closed forms: the Whittaker equation at spacing 2 and the inverse-square
//! potential.

use std::f64::consts::{LN_2, PI};

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};
use crate::specfun::{gamma, ln_gamma, sin_pi};
use crate::umbral_core::{GridFunction, Lattice, Number};

/// `Y(x₀ + j·stride)` for `j = 0..=steps` by repeated application of
/// `Y(x + stride) = ratio(x) Y(x)`. Exact for exact inputs and an exact ratio.
pub fn first_order_iterate<F>(ratio: F, x0: &Number, y0: &Number, steps: usize, stride: &Number) -> Result<GridFunction>
where
    F: Fn(&Number) -> Result<Number>,
{
    let lattice = Lattice::new(stride.clone())?;
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(y0.clone());
    let mut y = y0.clone();
    for j in 0..steps {
        let x = lattice.point(x0, j as i64);
        let r = ratio(&x).map_err(|_| UmbraError::pole_at("one-term recursion", j as i64))?;
        let v = r.to_complex();
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(UmbraError::pole_at("one-term recursion", j as i64));
        }
        y = &y * &r;
        samples.push(y.clone());
    }
    Ok(GridFunction::new(lattice, x0.clone(), samples))
}

fn divide(num: Number, den: Number) -> Result<Number> {
    num.checked_div(&den).ok_or(UmbraError::pole("recursion ratio"))
}

/// `2(x − 2κ)/x`: the Whittaker recursion at spacing 2 and μ = 1/2.
pub fn whittaker_half_ratio(kappa: Number) -> impl Fn(&Number) -> Result<Number> {
    move |x: &Number| {
        let two = Number::int(2);
        divide(&two * &(x - &(&two * &kappa)), x.clone())
    }
}

/// `2(x+2)(x−2κ)/((x+1+2μ)(x+1−2μ))`: the Whittaker recursion at spacing 2.
pub fn whittaker_a2_ratio(kappa: Number, mu: Number) -> impl Fn(&Number) -> Result<Number> {
    move |x: &Number| {
        let two = Number::int(2);
        let num = &(&two * &(x + &two)) * &(x - &(&two * &kappa));
        let shifted = x + &Number::one();
        let den = &(&shifted * &shifted) - &(&Number::int(4) * &(&mu * &mu));
        divide(num, den)
    }
}

/// `2s(1+s)/(s² + s + κ)` with `s = x/a`: the inverse-square recursion.
pub fn inverse_square_ratio(kappa: Number, a: Number) -> impl Fn(&Number) -> Result<Number> {
    move |x: &Number| {
        let s = x
            .checked_div(&a)
            .ok_or_else(|| UmbraError::Lattice("zero spacing".into()))?;
        let num = &(&Number::int(2) * &s) * &(&s + &Number::one());
        let den = &(&(&s * &s) + &s) + &kappa;
        divide(num, den)
    }
}

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// `e^{scale} Π Γ(num) / Π Γ(den)`. A pole in the denominator gives 0, a pole
/// in the numerator (only) gives +∞.
fn gamma_ratio(scale: Complex64, num: &[Complex64], den: &[Complex64]) -> Complex64 {
    if den.iter().any(|&z| is_pole(z)) {
        return Complex64::new(0.0, 0.0);
    }
    if num.iter().any(|&z| is_pole(z)) {
        return Complex64::new(f64::INFINITY, 0.0);
    }
    let mut l = scale;
    for &z in num {
        l += ln_gamma(z).unwrap_or(Complex64::new(f64::NAN, 0.0));
    }
    for &z in den {
        l -= ln_gamma(z).unwrap_or(Complex64::new(f64::NAN, 0.0));
    }
    l.exp()
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn combine(c1: Complex64, part1: Complex64, c2: Complex64, part2: Complex64) -> Complex64 {
    let mut v = Complex64::new(0.0, 0.0);
    if c1 != Complex64::new(0.0, 0.0) {
        v += c1 * part1;
    }
    if c2 != Complex64::new(0.0, 0.0) {
        v += c2 * part2;
    }
    v
}

/// Whittaker equation parameters with the two integration constants.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WhittakerParams {
    pub kappa: f64,
    pub mu: f64,
    pub c1: Complex64,
    pub c2: Complex64,
}

impl WhittakerParams {
    pub fn new(kappa: f64, mu: f64, c1: Complex64, c2: Complex64) -> Self {
        WhittakerParams { kappa, mu, c1, c2 }
    }
}

/// The two independent solutions at spacing 2 and μ = 1/2:
/// `2^{x/2} Γ(x/2−κ)/Γ(x/2)` and `(−2)^{x/2} / (Γ(x/2) Γ(1−x/2+κ))`
/// (principal branch, so the second is complex off the even integers).
pub fn whittaker_half_parts(kappa: f64, x: f64) -> (Complex64, Complex64) {
    let h = x / 2.0;
    let p1 = gamma_ratio(re(h * LN_2), &[re(h - kappa)], &[re(h)]);
    let p2 = gamma_ratio(Complex64::new(h * LN_2, h * PI), &[], &[re(h), re(1.0 - h + kappa)]);
    (p1, p2)
}

/// `C₁ 2^{x/2} Γ(x/2−κ)/Γ(x/2) + C₂ (−2)^{x/2}/(Γ(x/2)Γ(1−x/2+κ))`.
pub fn whittaker_half_closed(kappa: f64, x: f64, c1: Complex64, c2: Complex64) -> Complex64 {
    let (p1, p2) = whittaker_half_parts(kappa, x);
    combine(c1, p1, c2, p2)
}

/// `(C₁, C₂)` of [`whittaker_half_closed`] from the values `Y(2+2κ)` and
/// `Y(2)`: `C₁ = Γ(1+κ) 2^{−1−κ} Y(2+2κ)`, `C₂ = π/sin(πκ) C₁ − Γ(κ) Y(2)/2`.
pub fn whittaker_half_constants(
    kappa: f64,
    y_at_2_plus_2kappa: Complex64,
    y_at_2: Complex64,
) -> Result<(Complex64, Complex64)> {
    let s = sin_pi(kappa);
    if s == 0.0 || kappa <= -1.0 {
        return Err(UmbraError::Degenerate(format!(
            "constants are not recoverable from Y(2+2κ), Y(2) at κ = {kappa}"
        )));
    }
    let c1 = y_at_2_plus_2kappa * gamma(1.0 + kappa)? * 2f64.powf(-1.0 - kappa);
    let c2 = c1 * (PI / s) - y_at_2 * (gamma(kappa)? / 2.0);
    Ok((c1, c2))
}

/// The two solutions at spacing 2 for general μ:
/// `2^{x/2} Γ(1+x/2) Γ(x/2−κ) / (Γ(x/2+1/2+μ) Γ(x/2+1/2−μ))` and
/// `2^{x/2} / (Γ(x/2+1/2+μ) Γ(x/2+1/2−μ) Γ(−x/2) Γ(1+κ−x/2))`.
pub fn whittaker_a2_parts(kappa: f64, mu: f64, x: f64) -> (Complex64, Complex64) {
    let h = x / 2.0;
    let den = [re(h + 0.5 + mu), re(h + 0.5 - mu)];
    let p1 = gamma_ratio(re(h * LN_2), &[re(1.0 + h), re(h - kappa)], &den);
    let p2 = gamma_ratio(re(h * LN_2), &[], &[den[0], den[1], re(-h), re(1.0 + kappa - h)]);
    (p1, p2)
}

/// Umbral Whittaker function at spacing 2. The second part is entire in x;
/// the first has poles where `x/2 − κ` or `1 + x/2` is a nonpositive
/// integer, returned as `+∞` (see [`whittaker_a2_pole`]).
pub fn whittaker_a2_closed(params: &WhittakerParams, x: f64) -> Complex64 {
    let (p1, p2) = whittaker_a2_parts(params.kappa, params.mu, x);
    combine(params.c1, p1, params.c2, p2)
}

/// Whether the first part of [`whittaker_a2_closed`] sits on a pole at x.
pub fn whittaker_a2_pole(params: &WhittakerParams, x: f64) -> bool {
    let (p1, _) = whittaker_a2_parts(params.kappa, params.mu, x);
    params.c1 != Complex64::new(0.0, 0.0) && p1.re.is_infinite()
}

/// Inverse-square potential solution at spacing a, with `s = x/a` and
/// `r₁,₂ = (1 ± √(1−4κ))/2`:
/// `2^s/(Γ(s+r₁)Γ(s+r₂)) (C₁ Γ(1+s)Γ(s) + C₂/(Γ(−s)Γ(1−s)))`.
pub fn inverse_square_closed(kappa: f64, a: f64, x: f64, c1: Complex64, c2: Complex64) -> Result<Complex64> {
    if a == 0.0 || !a.is_finite() {
        return Err(UmbraError::Lattice(format!("invalid spacing {a}")));
    }
    let s = x / a;
    let root = re(1.0 - 4.0 * kappa).sqrt();
    let (r1, r2) = ((1.0 + root) / 2.0, (1.0 - root) / 2.0);
    let den = [re(s) + r1, re(s) + r2];
    let p1 = gamma_ratio(re(s * LN_2), &[re(1.0 + s), re(s)], &den);
    let p2 = gamma_ratio(re(s * LN_2), &[], &[den[0], den[1], re(-s), re(1.0 - s)]);
    Ok(combine(c1, p1, c2, p2))
}
