//! Umbral Airy function `UmAiryAi(x, a)`.

use std::f64::consts::PI;

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};
use crate::quad::{integrate_breakpoints, QuadBudget};
use crate::specfun::{airy_constants, pfq_eval, EvalMode, HyperSpec};
use crate::umbral_core::Number;
use crate::umbral_map::{umbral_hyper_map, LemmaInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AiryMethod {
    Quadrature,
    Series,
}

/// `Re(e^{iπ/6}/π ∫₀^∞ e^{−r³/3} (1 + i a r e^{iπ/6})^{x/a} dr)`, the
/// Fourier representation on the ray arg s = π/6. Negative `a` is allowed.
pub fn um_airy_quadrature(x: f64, a: f64, budget: QuadBudget) -> Result<f64> {
    if a == 0.0 || !a.is_finite() || !x.is_finite() {
        return Err(UmbraError::Lattice(format!("invalid spacing {a} or point {x}")));
    }
    let s = x / a;
    let rot = Complex64::from_polar(1.0, PI / 6.0);
    let ia = Complex64::new(0.0, a) * rot;
    // |1 + i a r e^{iπ/6}| lies in [√3/2, 1 + |a| r]
    let log_bound = |r: f64| -r * r * r / 3.0 + s.abs() * (1.0 + a.abs() * r).ln() + s.abs() * 0.15;
    let mut upper = 4.0;
    while log_bound(upper) > -45.0 {
        upper *= 1.2;
    }
    let f = |r: f64| {
        let base = Complex64::new(1.0, 0.0) + ia * r;
        (s * base.ln() - r * r * r / 3.0).exp()
    };
    let points: Vec<f64> = (0..=24).map(|k| upper * k as f64 / 24.0).collect();
    let q = integrate_breakpoints(f, &points, budget)?;
    Ok((rot * q.value).re / PI)
}

/// The two terminating series `(P₁, P₂)` with `UmAiryAi = c₁P₁ − c₂P₂`:
/// `P₁ = ₃F₁(−s/3, (1−s)/3, (2−s)/3; 2/3; −3a³)` and
/// `P₂ = x ₃F₁((1−s)/3, (2−s)/3, (3−s)/3; 4/3; −3a³)`, s = x/a a
/// nonnegative integer. Exact for exact inputs.
pub fn um_airy_series_parts(x: &Number, a: &Number) -> Result<(Number, Number)> {
    let s = x
        .checked_div(a)
        .ok_or_else(|| UmbraError::Lattice("zero spacing".into()))?;
    if s.nonnegative_integer().is_none() || a.to_f64() <= 0.0 {
        return Err(UmbraError::Precondition(
            "series method needs a > 0 and x/a a nonnegative integer".into(),
        ));
    }
    let mode = if x.is_exact() && a.is_exact() {
        EvalMode::Exact
    } else {
        EvalMode::Float
    };
    let ninth = Number::ratio(1, 9);
    let even = HyperSpec::new(vec![], vec![Number::ratio(2, 3)], ninth.clone())?;
    let p1 = pfq_eval(
        &umbral_hyper_map(&LemmaInput::plain(even, a.clone(), x.clone()).with_power_argument(3))?,
        mode,
        0.0,
    )?;
    let p2 = if s.is_zero() {
        Number::zero()
    } else {
        let odd = HyperSpec::new(vec![], vec![Number::ratio(4, 3)], ninth)?;
        let input = LemmaInput::plain(odd, a.clone(), x.clone())
            .with_power_argument(3)
            .with_overall_power(Number::one());
        pfq_eval(&umbral_hyper_map(&input)?, mode, 0.0)?
    };
    Ok((p1, p2))
}

/// `UmAiryAi(x, a)`. At `a = 0` this is the continuum Ai(x).
pub fn um_airy(x: f64, a: f64, method: AiryMethod) -> Result<f64> {
    if a == 0.0 {
        return crate::specfun::airy_ai_ref(x);
    }
    match method {
        AiryMethod::Quadrature => um_airy_quadrature(x, a, QuadBudget::with_tol(1e-14, 1e-12)),
        AiryMethod::Series => {
            let s = x / a;
            if s.fract() != 0.0 || s < 0.0 || a < 0.0 {
                return Err(UmbraError::Precondition(
                    "series method needs a > 0 and x/a a nonnegative integer".into(),
                ));
            }
            let (p1, p2) = um_airy_series_parts(&Number::Real(x), &Number::Real(a))?;
            let (c1, c2) = airy_constants();
            Ok(c1 * p1.to_f64() - c2 * p2.to_f64())
        }
    }
}
