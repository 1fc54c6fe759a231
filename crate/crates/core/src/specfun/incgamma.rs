//! Upper incomplete gamma Γ(s, x).

use super::gamma::{gamma, ln_gamma_real};
use crate::error::{Result, UmbraError};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_ITER: usize = 10_000;

/// Lentz continued fraction; converges quickly for x > s + 1.
fn continued_fraction(s: f64, x: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - s;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            return Ok((s * x.ln() - x).exp() * h);
        }
    }
    Err(UmbraError::NoConvergence { terms: MAX_ITER })
}

/// Lower incomplete gamma by its power series, for s > 0.
fn lower_series(s: f64, x: f64) -> Result<f64> {
    let mut term = 1.0 / s;
    let mut sum = term;
    for k in 1..MAX_ITER {
        term *= x / (s + k as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            return Ok(sum * (s * x.ln() - x).exp());
        }
    }
    Err(UmbraError::NoConvergence { terms: MAX_ITER })
}

/// E₁(x) = Γ(0, x) for small x.
fn exp_integral_e1(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..200 {
        term *= -x / k as f64;
        let t = term / k as f64;
        sum += t;
        if t.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    -EULER_GAMMA - x.ln() - sum
}

/// `Γ(s, x) = ∫_x^∞ t^{s−1} e^{−t} dt` for x ≥ 0.
pub fn incomplete_gamma_upper(s: f64, x: f64) -> Result<f64> {
    if !(x >= 0.0) || !s.is_finite() {
        return Err(UmbraError::Domain(format!("incomplete gamma needs x ≥ 0, got x = {x}")));
    }
    if x == 0.0 {
        if s <= 0.0 {
            return Err(UmbraError::Domain("Γ(s, 0) diverges for s ≤ 0".into()));
        }
        return gamma(s);
    }
    if x > s + 1.0 || (s <= 0.0 && x > 1.5) {
        return continued_fraction(s, x);
    }
    if s > 0.0 {
        let (lg, _) = ln_gamma_real(s)?;
        return Ok(lg.exp() - lower_series(s, x)?);
    }
    // s ≤ 0, small x: recur down with Γ(s,x) = (Γ(s+1,x) − x^s e^{−x})/s.
    let (mut cur, mut value) = if s.fract() == 0.0 {
        (0.0, exp_integral_e1(x))
    } else {
        let top = s + (1.0 - s).floor();
        (top, incomplete_gamma_upper(top, x)?)
    };
    while cur > s {
        let next = cur - 1.0;
        value = (value - x.powf(next) * (-x).exp()) / next;
        cur = next;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn examples() {
        assert_relative_eq!(
            incomplete_gamma_upper(1.0, 1.0).unwrap(),
            (-1f64).exp(),
            max_relative = 1e-14
        );
        assert_eq!(incomplete_gamma_upper(2.0, 0.0).unwrap(), 1.0);
        let e = 1f64.exp();
        assert_relative_eq!(e * incomplete_gamma_upper(2.0, 1.0).unwrap(), 2.0, max_relative = 1e-13);
        assert_relative_eq!(e * incomplete_gamma_upper(3.0, 1.0).unwrap(), 5.0, max_relative = 1e-13);
        assert!(incomplete_gamma_upper(1.0, -0.1).is_err());
    }

    #[test]
    fn recurrence_and_reference() {
        let (s, x) = (2.5, 1.7);
        let g = incomplete_gamma_upper(s, x).unwrap();
        // mpmath: gammainc(2.5, 1.7)
        assert_relative_eq!(g, 0.848_876_789_458_320_64, max_relative = 1e-12);
        let lhs = incomplete_gamma_upper(s + 1.0, x).unwrap();
        assert_relative_eq!(lhs, s * g + x.powf(s) * (-x).exp(), max_relative = 1e-12);
    }

    #[test]
    fn nonpositive_order() {
        // Γ(0, 0.5) = E₁(0.5), Γ(−1, x) = E₂(x)/x
        let e1 = 0.559_773_594_776_160_8;
        assert_relative_eq!(incomplete_gamma_upper(0.0, 0.5).unwrap(), e1, max_relative = 1e-13);
        let x: f64 = 0.5;
        let e2 = (-x).exp() - x * e1;
        assert_relative_eq!(incomplete_gamma_upper(-1.0, x).unwrap(), e2 / x, max_relative = 1e-12);
        // continuity between CF and recurrence branches
        let a = incomplete_gamma_upper(-0.5, 1.5).unwrap();
        let b = incomplete_gamma_upper(-0.5, 1.5 + 1e-12).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-9);
    }
}
