//! Tricomi's confluent hypergeometric function U(α, β, x) for real
//! parameters and x > 0.
//!
//! Routes, in order: polynomial cases, the large-x asymptotic series when it
//! reaches full precision, the two-₁F₁ combination when its cancellation is
//! tolerable, and otherwise the Laplace integral with downward recurrence
//! in α.

use super::gamma::{gamma, ln_gamma_real, rgamma};
use super::hyper::sum_series;
use crate::error::{Result, UmbraError};
use crate::quad::integrate_half_line;

/// Half-width of the β-average used near integer β.
pub const INTEGER_BETA_SHIFT: f64 = 1e-5;
const INTEGER_BETA_WINDOW: f64 = 1e-6;
const TARGET: f64 = 1e-13;

fn nonpositive_int(x: f64) -> Option<u64> {
    (x <= 0.0 && x.fract() == 0.0).then_some((-x) as u64)
}

/// `U(−n, b, x) = (−1)^n Σ_k C(n,k) (b+k)_{n−k} (−x)^k`.
fn polynomial(n: u64, b: f64, x: f64) -> f64 {
    let mut sum = 0.0;
    let mut binom = 1.0;
    for k in 0..=n {
        let mut poch = 1.0;
        for j in k..n {
            poch *= b + j as f64;
        }
        sum += binom * poch * (-x).powi(k as i32);
        binom *= (n - k) as f64 / (k + 1) as f64;
    }
    if n.is_multiple_of(2) {
        sum
    } else {
        -sum
    }
}

/// Kummer M(a, b, x) with the largest term magnitude seen.
fn kummer_m(a: f64, b: f64, x: f64) -> Result<(f64, f64)> {
    let mut peak = 1.0f64;
    let s = sum_series(
        |k, t| {
            let k = k as f64;
            let next = t * ((a + k) / ((b + k) * (k + 1.0)) * x);
            peak = peak.max(next.norm());
            next
        },
        1e-17,
    )?;
    Ok((s.re, peak))
}

/// `x^{−a} Σ (a)_k (a−b+1)_k/k! (−1/x)^k`, truncated at the smallest term.
/// Returns `None` unless that term is below `TARGET` relative.
fn asymptotic(a: f64, b: f64, x: f64) -> Option<f64> {
    let c = a - b + 1.0;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..200 {
        let kf = k as f64;
        let next = term * (a + kf) * (c + kf) / ((kf + 1.0) * -x);
        if next.abs() >= term.abs() {
            return None;
        }
        term = next;
        sum += term;
        if term.abs() < TARGET * 1e-2 * sum.abs() {
            return Some(sum * x.powf(-a));
        }
    }
    None
}

/// Two-₁F₁ combination
/// `Γ(1−b)/Γ(a−b+1) M(a,b,x) + Γ(b−1)/Γ(a) x^{1−b} M(a−b+1, 2−b, x)`
/// with a cancellation estimate.
fn combination(a: f64, b: f64, x: f64) -> Result<(f64, f64)> {
    let (m1, p1) = kummer_m(a, b, x)?;
    let (m2, p2) = kummer_m(a - b + 1.0, 2.0 - b, x)?;
    let c1 = gamma(1.0 - b)? * rgamma(a - b + 1.0);
    let c2 = gamma(b - 1.0)? * rgamma(a) * x.powf(1.0 - b);
    let value = c1 * m1 + c2 * m2;
    let err = 4.0 * f64::EPSILON * ((c1 * p1).abs() + (c2 * p2).abs() + (c1 * m1).abs() + (c2 * m2).abs());
    Ok((value, err))
}

fn combination_near_integer(a: f64, b: f64, x: f64) -> Result<(f64, f64)> {
    let nearest = b.round();
    if (b - nearest).abs() > INTEGER_BETA_WINDOW {
        return combination(a, b, x);
    }
    let (lo, e1) = combination(a, nearest - INTEGER_BETA_SHIFT, x)?;
    let (hi, e2) = combination(a, nearest + INTEGER_BETA_SHIFT, x)?;
    let value = 0.5 * (lo + hi);
    // Second-order averaging error, estimated from the spread.
    let err = e1 + e2 + (hi - lo).abs() * INTEGER_BETA_SHIFT;
    Ok((value, err))
}

/// `(1/Γ(a)) ∫₀^∞ e^{−xt} t^{a−1} (1+t)^{b−a−1} dt` for a ≥ 1.
fn laplace(a: f64, b: f64, x: f64) -> Result<f64> {
    let (lg, _) = ln_gamma_real(a)?;
    integrate_half_line(
        |t| (-x * t + (a - 1.0) * t.ln() + (b - a - 1.0) * t.ln_1p() - lg).exp(),
        1e-14,
    )
}

/// Laplace integral at `a + m, a + m + 1` with `a + m ≥ 1`, then the
/// recurrence `U(a−1) = (2a + x − b) U(a) − a(a−b+1) U(a+1)` downward.
fn integral_route(a: f64, b: f64, x: f64) -> Result<f64> {
    let m = if a >= 1.0 { 0 } else { (1.0 - a).ceil() as u64 };
    let top = a + m as f64;
    let mut u1 = laplace(top + 1.0, b, x)?;
    let mut u0 = laplace(top, b, x)?;
    let mut cur = top;
    for _ in 0..m {
        let prev = (2.0 * cur + x - b) * u0 - cur * (cur - b + 1.0) * u1;
        u1 = u0;
        u0 = prev;
        cur -= 1.0;
    }
    Ok(u0)
}

/// Tricomi U(α, β, x) for x > 0.
pub fn tricomi_u(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(UmbraError::Domain(format!("Tricomi U needs x > 0, got {x}")));
    }
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(UmbraError::Domain("non-finite Tricomi U parameter".into()));
    }
    if let Some(n) = nonpositive_int(alpha) {
        return Ok(polynomial(n, beta, x));
    }
    // Kummer's transformation U(a,b,x) = x^{1−b} U(a−b+1, 2−b, x).
    if let Some(n) = nonpositive_int(alpha - beta + 1.0) {
        return Ok(x.powf(1.0 - beta) * polynomial(n, 2.0 - beta, x));
    }
    if let Some(v) = asymptotic(alpha, beta, x) {
        return Ok(v);
    }
    if let Ok((v, err)) = combination_near_integer(alpha, beta, x) {
        if v.is_finite() && err <= TARGET * v.abs() {
            return Ok(v);
        }
    }
    integral_route(alpha, beta, x)
}

/// The two-₁F₁ combination alone, as written in the defining identity.
/// Useful as a cross-check; prefer [`tricomi_u`].
pub fn tricomi_u_combination(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(UmbraError::Domain(format!("Tricomi U needs x > 0, got {x}")));
    }
    combination_near_integer(alpha, beta, x).map(|(v, _)| v)
}
