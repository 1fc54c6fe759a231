//! Basic polynomials, umbral powers, and the umbral exponential and trig
//! functions.

use num::complex::Complex64;

use super::Number;
use crate::error::{Result, UmbraError};
use crate::specfun::gamma::ln_gamma_real;

/// Basic polynomial `[t]^n = t(t−a)(t−2a)⋯(t−(n−1)a)`, the umbral image of
/// `t^n`. Computed as the literal product, so exact inputs give exact output.
pub fn falling_factorial(t: &Number, a: &Number, n: u32) -> Number {
    let mut acc = Number::one();
    let mut factor = t.clone();
    for _ in 0..n {
        acc = &acc * &factor;
        factor = &factor - a;
    }
    acc
}

/// Negative umbral power `[1/t]^n = 1/((t+a)(t+2a)⋯(t+na))`.
pub fn rising_factorial_inverse(t: &Number, a: &Number, n: u32) -> Result<Number> {
    let mut denom = Number::one();
    for j in 1..=n {
        let factor = t + &(&Number::int(j as i64) * a);
        if factor.is_zero() {
            return Err(UmbraError::pole_at("inverse rising factorial", j as i64));
        }
        denom = &denom * &factor;
    }
    denom.recip().ok_or(UmbraError::pole("inverse rising factorial"))
}

/// Arbitrary umbral power `a^γ Γ(x/a+1)/Γ(x/a−γ+1)`.
///
/// Integer `γ` is routed to the literal products so it agrees with
/// [`falling_factorial`] and [`rising_factorial_inverse`]. Non-integer `γ`
/// goes through log-gamma in floating point; a pole in the denominator
/// gamma yields 0. Negative spacings are accepted here: `a^γ` is then the
/// principal complex power.
pub fn umbral_power_gamma(x: &Number, a: &Number, gamma_exp: f64) -> Result<Number> {
    if a.is_zero() {
        return Err(UmbraError::Lattice("zero spacing".into()));
    }
    if gamma_exp.fract() == 0.0 && gamma_exp.abs() < 1.0e6 {
        let g = gamma_exp as i64;
        return if g >= 0 {
            Ok(falling_factorial(&x.to_float(), &a.to_float(), g as u32))
        } else {
            rising_factorial_inverse(&x.to_float(), &a.to_float(), (-g) as u32)
        };
    }
    let (x, av) = (x.to_f64(), a.to_f64());
    let u = x / av + 1.0;
    let v = u - gamma_exp;
    let is_pole = |z: f64| z <= 0.0 && z.fract() == 0.0;
    if is_pole(v) {
        return Ok(Number::Real(0.0));
    }
    if is_pole(u) {
        return Err(UmbraError::pole("umbral power numerator gamma"));
    }
    let (lu, su) = ln_gamma_real(u)?;
    let (lv, sv) = ln_gamma_real(v)?;
    let ratio = su * sv * (lu - lv).exp();
    if av > 0.0 {
        Ok(Number::Real(av.powf(gamma_exp) * ratio))
    } else {
        let scale = Complex64::new(av, 0.0).powf(gamma_exp);
        Ok(Number::Complex(scale * ratio))
    }
}

/// Umbral exponential `e^{λ[t]} = (1+λa)^{t/a}`.
///
/// Exact when `t/a` is an integer and the inputs are exact. For non-integer
/// `t/a` the principal branch is used and a base on `(-inf, 0]` is a
/// branch-cut error.
pub fn umbral_exp(lambda: &Number, t: &Number, a: &Number) -> Result<Number> {
    let steps = t
        .checked_div(a)
        .ok_or_else(|| UmbraError::Lattice("zero spacing".into()))?;
    let base = &Number::one() + &(lambda * a);
    base.powc(&steps).map_err(|e| match e {
        UmbraError::BranchCut { .. } => UmbraError::BranchCut {
            what: "umbral exponential",
        },
        UmbraError::Pole { .. } => UmbraError::pole("umbral exponential (1+λa = 0)"),
        other => other,
    })
}

/// `(Sin[t], Cos[t])`, the umbral sine and cosine, built from
/// `(1 ± ia)^{t/a}`.
///
/// Real inputs give real outputs. For exact `a` and integer `t/a` the pair
/// is the exact imaginary and real part of `(1+ia)^{t/a}`.
pub fn umbral_trig(t: &Number, a: &Number) -> Result<(Number, Number)> {
    if t.is_complex() || a.is_complex() {
        let ep = umbral_exp(&Number::complex(0.0, 1.0), t, a)?.to_complex();
        let em = umbral_exp(&Number::complex(0.0, -1.0), t, a)?.to_complex();
        let i = Complex64::new(0.0, 1.0);
        return Ok((Number::Complex((ep - em) / (2.0 * i)), Number::Complex((ep + em) / 2.0)));
    }
    let steps = t
        .checked_div(a)
        .ok_or_else(|| UmbraError::Lattice("zero spacing".into()))?;
    if let Some(n) = steps.as_integer() {
        // (1+ia)^n = C + iS with rational C, S when a is exact.
        let (mut re, mut im) = (Number::one(), Number::zero());
        let (step_re, step_im) = if n >= 0 {
            (Number::one(), a.clone())
        } else {
            let d = &Number::one() + &(a * a);
            (&Number::one() / &d, -(a / &d))
        };
        for _ in 0..n.unsigned_abs() {
            let nr = &(&re * &step_re) - &(&im * &step_im);
            let ni = &(&re * &step_im) + &(&im * &step_re);
            re = nr;
            im = ni;
        }
        return Ok((im, re));
    }
    // (1+a²)^{t/2a} (sin, cos)(t·arctan(a)/a)
    let (t, a) = (t.to_f64(), a.to_f64());
    let radius = (1.0 + a * a).powf(t / (2.0 * a));
    let phase = t * a.atan() / a;
    Ok((Number::Real(radius * phase.sin()), Number::Real(radius * phase.cos())))
}
