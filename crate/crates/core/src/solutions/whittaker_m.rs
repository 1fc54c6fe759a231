//! Umbral image of `whittakerM(κ, μ, x) = e^{−x/2} x^{μ+1/2} ₁F₁(μ−κ+1/2; 2μ+1; x)`.

use crate::error::{Result, UmbraError};
use crate::specfun::gauss_2f1_ext;
use crate::umbral_core::{umbral_power_gamma, Number};

/// `a^{μ+1/2} Γ(x/a+1)/Γ(x/a−μ+1/2) (1−a/2)^{x/a−μ−1/2}
///  ₂F₁(μ+1/2−κ, μ+1/2−x/a; 2μ+1; 2a/(a−2))`, for `0 < a < 2`.
///
/// Spacing 2 itself is covered by [`whittaker_a2_closed`](super::whittaker_a2_closed).
pub fn um_whittaker_m(kappa: f64, mu: f64, x: f64, a: f64) -> Result<f64> {
    if !(a > 0.0 && a < 2.0) {
        return Err(UmbraError::Domain(format!("spacing must lie in (0, 2), got {a}")));
    }
    let s = x / a;
    let g = mu + 0.5;
    let power = umbral_power_gamma(&Number::real(x), &Number::real(a), g)?.to_f64();
    if power == 0.0 {
        return Ok(0.0);
    }
    let growth = (1.0 - a / 2.0).powf(s - g);
    let f = gauss_2f1_ext(g - kappa, g - s, 2.0 * mu + 1.0, 2.0 * a / (a - 2.0))?;
    Ok(power * growth * f)
}
