//! One-soliton Toda lattice solutions and their time-umbral images.

use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};
use crate::specfun::lerch_nonpos;
use crate::umbral_core::Number;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TodaParams {
    pub q0: f64,
    pub alpha: f64,
    pub beta: f64,
    /// +1 or −1: the sign in `γ = ±2 sinh(β/2)`.
    pub branch: i8,
}

impl TodaParams {
    pub fn new(q0: f64, alpha: f64, beta: f64, branch: i8) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(UmbraError::Domain(format!("α must be positive, got {alpha}")));
        }
        if beta == 0.0 || !beta.is_finite() {
            return Err(UmbraError::Domain(format!("β must be finite and nonzero, got {beta}")));
        }
        if branch != 1 && branch != -1 {
            return Err(UmbraError::Domain(format!("branch must be ±1, got {branch}")));
        }
        Ok(TodaParams {
            q0,
            alpha,
            beta,
            branch,
        })
    }

    pub fn gamma(&self) -> f64 {
        f64::from(self.branch) * 2.0 * (self.beta / 2.0).sinh()
    }

    /// `γ/β`.
    pub fn velocity(&self) -> f64 {
        self.gamma() / self.beta
    }

    /// `z = −α e^{−βn}`.
    pub fn z(&self, n: i64) -> f64 {
        -self.alpha * (-self.beta * n as f64).exp()
    }
}

/// `ln(1 + e^y)` without overflow.
fn softplus(y: f64) -> f64 {
    if y > 0.0 {
        y + (-y).exp().ln_1p()
    } else {
        y.exp().ln_1p()
    }
}

/// `e^y/(1 + αe^y)` without overflow.
fn logistic(alpha: f64, y: f64) -> f64 {
    if y > 0.0 {
        1.0 / (alpha + (-y).exp())
    } else {
        y.exp() / (1.0 + alpha * y.exp())
    }
}

/// `(q, p)` at site n and time t:
/// `q = q₀ + ln((1+αe^{−βn+γt}) / (1+αe^{−β(n+1)+γt}))`, `p = ∂q/∂t`.
pub fn toda_continuum(n: i64, t: f64, params: &TodaParams) -> (f64, f64) {
    let g = params.gamma();
    let la = params.alpha.ln();
    let y0 = -params.beta * n as f64 + g * t;
    let y1 = y0 - params.beta;
    let q = params.q0 + softplus(y0 + la) - softplus(y1 + la);
    let p = params.alpha * g * (logistic(params.alpha, y0) - logistic(params.alpha, y1));
    (q, p)
}

fn binomial(m: u32, j: u32) -> f64 {
    (0..j).fold(1.0, |acc, i| acc * f64::from(m - i) / f64::from(i + 1))
}

/// `R(j, z) = Φ(ze^{−β}, 1−j, 0) − Φ(z, 1−j, 0)`.
fn lerch_difference(z: f64, beta: f64, j: u32) -> Result<f64> {
    let hi = lerch_nonpos(&Number::Real(z * (-beta).exp()), j)?;
    let lo = lerch_nonpos(&Number::Real(z), j)?;
    Ok(hi.to_f64() - lo.to_f64())
}

fn check_time(m: u32, a: f64) -> Result<()> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(UmbraError::Lattice(format!("time spacing must be positive, got {a}")));
    }
    if m > 170 {
        return Err(UmbraError::Domain(format!("m = {m} exceeds the supported step count")));
    }
    Ok(())
}

/// `Q(n, ma) = q(n, 0) + Σ_{j=1}^{m} (γa)^j C(m,j) R(j, z)` using the
/// rational closed forms of Φ at any z ≠ 1, i.e. the analytic continuation
/// of the series beyond |z| < 1.
pub fn toda_umbral_continued(n: i64, m: u32, a: f64, params: &TodaParams) -> Result<f64> {
    check_time(m, a)?;
    let c = params.gamma() * a;
    let z = params.z(n);
    let mut q = toda_continuum(n, 0.0, params).0;
    for j in 1..=m {
        q += c.powi(j as i32) * binomial(m, j) * lerch_difference(z, params.beta, j)?;
    }
    Ok(q)
}

/// `q₀ + Σ_{k≥1} z^k/k (e^{−kβ}−1)(1+γak)^m`, summed until three consecutive
/// terms fall below `tol` relative to the partial sum (absolute below 1).
pub fn toda_series_truncated(n: i64, m: u32, a: f64, params: &TodaParams, tol: f64) -> Result<(f64, usize)> {
    check_time(m, a)?;
    let z = params.z(n);
    if z.abs() >= 1.0 {
        return Err(UmbraError::Domain(format!("series needs |z| < 1, got z = {z}")));
    }
    let c = params.gamma() * a;
    let mut sum = 0.0;
    let mut zk = 1.0;
    let mut small = 0;
    for k in 1..=1_000_000usize {
        zk *= z;
        let kf = k as f64;
        let term = zk / kf * ((-kf * params.beta).exp() - 1.0) * (1.0 + c * kf).powi(m as i32);
        sum += term;
        if term.abs() <= tol * sum.abs().max(1.0) {
            small += 1;
            if small >= 3 {
                return Ok((params.q0 + sum, k));
            }
        } else {
            small = 0;
        }
    }
    Err(UmbraError::NoConvergence { terms: 1_000_000 })
}

/// Umbral soliton `Q(n, t = ma)` for |z| < 1.
///
/// With `tol > 0` the closed form is checked against the truncated series
/// and a disagreement beyond `tol` (relative, absolute below 1) is an error.
pub fn toda_umbral(n: i64, m: u32, a: f64, params: &TodaParams, tol: f64) -> Result<f64> {
    let z = params.z(n);
    if z.abs() >= 1.0 {
        return Err(UmbraError::Domain(format!(
            "umbral soliton series needs |z| = αe^{{−βn}} < 1, got {} at n = {n}",
            z.abs()
        )));
    }
    let q = toda_umbral_continued(n, m, a, params)?;
    if tol > 0.0 {
        let (s, terms) = toda_series_truncated(n, m, a, params, 1e-18)?;
        if (s - q).abs() > tol * q.abs().max(1.0) {
            return Err(UmbraError::NoConvergence { terms });
        }
    }
    Ok(q)
}

/// Umbral momentum `P(n, ma) = γ Σ_{j=0}^{m} (γa)^j C(m,j) R(j+1, z)`, the
/// image of `p = ∂q/∂t`; `ΔQ = P` on the time lattice.
pub fn toda_umbral_momentum(n: i64, m: u32, a: f64, params: &TodaParams) -> Result<f64> {
    check_time(m, a)?;
    let g = params.gamma();
    let c = g * a;
    let z = params.z(n);
    let mut p = 0.0;
    for j in 0..=m {
        p += c.powi(j as i32) * binomial(m, j) * lerch_difference(z, params.beta, j + 1)?;
    }
    Ok(g * p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_params() -> TodaParams {
        TodaParams::new(0.0, 1.0, 1.0, 1).unwrap()
    }

    #[test]
    fn gamma_constraint() {
        assert!((reference_params().gamma() - 1.042_190_610_987_494_9).abs() < 1e-15);
        assert!((TodaParams::new(0.0, 1.0, 1.0, -1).unwrap().velocity() + 1.042_190_610_987_494_9).abs() < 1e-15);
    }

    #[test]
    fn continuum_limits_and_translation() {
        let p = reference_params();
        assert!(toda_continuum(60, 0.0, &p).0.abs() < 1e-20);
        assert!((toda_continuum(-40, 0.0, &p).0 - 1.0).abs() < 1e-15);
        let shift = p.beta / p.gamma();
        for n in -3..=3 {
            let a = toda_continuum(n, 0.7 + shift, &p).0;
            let b = toda_continuum(n - 1, 0.7, &p).0;
            assert!((a - b).abs() < 1e-13);
        }
        let h = 1e-5;
        let d = (toda_continuum(0, h, &p).0 - toda_continuum(0, -h, &p).0) / (2.0 * h);
        assert!((d - toda_continuum(0, 0.0, &p).1).abs() < 1e-8);
    }

    #[test]
    fn equations_of_motion() {
        let p = TodaParams::new(0.3, 2.0, 0.8, -1).unwrap();
        let h = 1e-4;
        for n in -2..=2 {
            let dp = (toda_continuum(n, 0.4 + h, &p).1 - toda_continuum(n, 0.4 - h, &p).1) / (2.0 * h);
            let q = |k| toda_continuum(k, 0.4, &p).0;
            let force = -((-(q(n + 1) - q(n))).exp() - (-(q(n) - q(n - 1))).exp());
            assert!((dp - force).abs() < 1e-7);
        }
    }

    #[test]
    fn closed_form_matches_series() {
        let p = reference_params();
        for n in 1..=5 {
            for m in 0..=4 {
                let q = toda_umbral(n, m, 1.0, &p, 1e-10).unwrap();
                let (s, _) = toda_series_truncated(n, m, 1.0, &p, 1e-18).unwrap();
                assert!((q - s).abs() < 1e-10);
            }
            assert!((toda_umbral(n, 0, 1.0, &p, 0.0).unwrap() - toda_continuum(n, 0.0, &p).0).abs() < 1e-14);
        }
        assert!(matches!(toda_umbral(0, 1, 1.0, &p, 0.0), Err(UmbraError::Domain(_))));
    }

    #[test]
    fn single_step_binomial_structure() {
        let p = reference_params();
        let (n, a) = (2, 0.5);
        let z = p.z(n);
        let ze = z * (-p.beta).exp();
        let expect = toda_continuum(n, 0.0, &p).0 + p.gamma() * a * (1.0 / (1.0 - ze) - 1.0 / (1.0 - z));
        assert!((toda_umbral(n, 1, a, &p, 0.0).unwrap() - expect).abs() < 1e-15);
    }

    #[test]
    fn difference_of_q_is_p() {
        let p = reference_params();
        let a = 0.5;
        for n in 1..=4 {
            for m in 0..=3 {
                let dq = (toda_umbral(n, m + 1, a, &p, 0.0).unwrap() - toda_umbral(n, m, a, &p, 0.0).unwrap()) / a;
                let pm = toda_umbral_momentum(n, m, a, &p).unwrap();
                assert!((dq - pm).abs() < 1e-12);
            }
        }
    }
}
