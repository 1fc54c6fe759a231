//! Umbral Gaussian `G(x, a) = Σ (−1)ⁿ [x]^{2n}/n! = ₂F₀(−x/2a, (1−x/a)/2; ; −4a²)`.

use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};
use crate::specfun::{pfq_eval, tricomi_u, EvalMode, HyperSpec};
use crate::umbral_core::Number;
use crate::umbral_map::{umbral_hyper_map, LemmaInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaussianMethod {
    Series,
    UIdentity,
}

/// The terminating ₂F₀ at `x/a` a nonnegative integer; exact for exact input.
pub fn um_gaussian_series(x: &Number, a: &Number) -> Result<Number> {
    let s = x
        .checked_div(a)
        .ok_or_else(|| UmbraError::Lattice("zero spacing".into()))?;
    if s.nonnegative_integer().is_none() {
        return Err(UmbraError::Precondition(
            "series method needs x/a a nonnegative integer".into(),
        ));
    }
    let mode = if x.is_exact() && a.is_exact() {
        EvalMode::Exact
    } else {
        EvalMode::Float
    };
    let gauss = HyperSpec::new(vec![], vec![], Number::int(-1))?;
    let mapped = umbral_hyper_map(&LemmaInput::plain(gauss, a.clone(), x.clone()).with_power_argument(2))?;
    pfq_eval(&mapped, mode, 0.0)
}

/// `(2a)^{x/a−1} U((1−x/a)/2, 3/2, 1/(4a²))`, the Borel sum of the ₂F₀.
pub fn um_gaussian_u(x: f64, a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(UmbraError::Lattice(format!("spacing must be positive, got {a}")));
    }
    let s = x / a;
    let u = tricomi_u((1.0 - s) / 2.0, 1.5, 1.0 / (4.0 * a * a))?;
    Ok((2.0 * a).powf(s - 1.0) * u)
}

/// `G(x, a)`; `a = 0` gives `e^{−x²}`.
pub fn um_gaussian(x: f64, a: f64, method: GaussianMethod) -> Result<f64> {
    if a == 0.0 {
        return Ok((-x * x).exp());
    }
    match method {
        GaussianMethod::Series => um_gaussian_series(&Number::Real(x), &Number::Real(a)).map(|v| v.to_f64()),
        GaussianMethod::UIdentity => um_gaussian_u(x, a),
    }
}
