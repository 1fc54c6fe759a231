//! Gauss ₂F₁ on the real line: direct series, the Pfaff transformation
//! `z ↦ z/(z−1)`, and the two-term connection formula for `z → −∞`.

use super::gamma::{ln_gamma_real, rgamma};
use super::hyper::sum_series;
use crate::error::{Result, UmbraError};

const SERIES_TOL: f64 = 1e-17;
/// |z| below which the direct series is used.
pub const SERIES_RADIUS: f64 = 0.9;
/// −z above which the connection formula is used.
pub const CONNECTION_THRESHOLD: f64 = 5.0;

fn nonpositive_int(x: f64) -> Option<u64> {
    (x <= 0.0 && x.fract() == 0.0).then_some((-x) as u64)
}

fn is_int(x: f64) -> bool {
    x.fract() == 0.0
}

fn terminating(a: f64, b: f64) -> Option<u64> {
    match (nonpositive_int(a), nonpositive_int(b)) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (m, n) => m.or(n),
    }
}

fn check_denominator(a: f64, b: f64, c: f64) -> Result<()> {
    if let Some(m) = nonpositive_int(c) {
        match terminating(a, b) {
            Some(n) if n <= m => {}
            _ => return Err(UmbraError::pole_at("2F1 denominator parameter", -(m as i64))),
        }
    }
    Ok(())
}

fn finite_sum(a: f64, b: f64, c: f64, z: f64, n: u64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let k = k as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
    }
    sum
}

/// Direct power series; requires |z| < 1 unless the series terminates.
pub fn gauss_2f1_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    check_denominator(a, b, c)?;
    if let Some(n) = terminating(a, b) {
        return Ok(finite_sum(a, b, c, z, n));
    }
    if z.abs() >= 1.0 {
        return Err(UmbraError::Domain(format!("2F1 series diverges at z = {z}")));
    }
    let s = sum_series(
        |k, t| {
            let k = k as f64;
            t * ((a + k) * (b + k) / ((c + k) * (k + 1.0)) * z)
        },
        SERIES_TOL,
    )?;
    Ok(s.re)
}

/// `(1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1))` summed as a series; valid for
/// `z < 1/2` (where |z/(z−1)| < 1) and any terminating case.
pub fn gauss_2f1_pfaff(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    check_denominator(a, b, c)?;
    if z >= 1.0 {
        return Err(UmbraError::Domain(format!("Pfaff transform needs z < 1, got {z}")));
    }
    let w = z / (z - 1.0);
    // Keep a terminating parameter in the transformed series when there is one.
    if nonpositive_int(b).is_some() && nonpositive_int(a).is_none() {
        return Ok((1.0 - z).powf(-b) * gauss_2f1_series(c - a, b, c, w)?);
    }
    Ok((1.0 - z).powf(-a) * gauss_2f1_series(a, c - b, c, w)?)
}

/// `Γ(p)Γ(q)/(Γ(r)Γ(s))` with zeros at poles of the denominator gammas.
fn gamma_ratio(p: f64, q: f64, r: f64, s: f64) -> Result<f64> {
    if rgamma(r) == 0.0 || rgamma(s) == 0.0 {
        return Ok(0.0);
    }
    let (lp, sp) = ln_gamma_real(p)?;
    let (lq, sq) = ln_gamma_real(q)?;
    let (lr, sr) = ln_gamma_real(r)?;
    let (ls, ss) = ln_gamma_real(s)?;
    Ok(sp * sq * sr * ss * (lp + lq - lr - ls).exp())
}

/// Two-term connection formula for `z < −1`:
///
/// `Γ(c)Γ(b−a)/(Γ(b)Γ(c−a)) (−z)^{−a} F(a, a−c+1; a−b+1; 1/z)
///  + Γ(c)Γ(a−b)/(Γ(a)Γ(c−b)) (−z)^{−b} F(b, b−c+1; b−a+1; 1/z)`.
///
/// Integer `a−b` is the logarithmic case and is refused.
pub fn gauss_2f1_connection(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    check_denominator(a, b, c)?;
    if z >= -1.0 {
        return Err(UmbraError::Domain(format!("connection formula needs z < −1, got {z}")));
    }
    if is_int(a - b) {
        return Err(UmbraError::Degenerate(format!(
            "a − b = {} is an integer (logarithmic case)",
            a - b
        )));
    }
    let c1 = gamma_ratio(c, b - a, b, c - a)?;
    let c2 = gamma_ratio(c, a - b, a, c - b)?;
    let (mz, iz) = (-z, 1.0 / z);
    let t1 = if c1 == 0.0 {
        0.0
    } else {
        c1 * mz.powf(-a) * gauss_2f1_series(a, a - c + 1.0, a - b + 1.0, iz)?
    };
    let t2 = if c2 == 0.0 {
        0.0
    } else {
        c2 * mz.powf(-b) * gauss_2f1_series(b, b - c + 1.0, b - a + 1.0, iz)?
    };
    Ok(t1 + t2)
}

/// ₂F₁(a, b; c; z) for all real z < 1, and z = 1 when `c − a − b > 0`.
///
/// Terminating parameters give a finite sum for any z. Otherwise: series
/// for |z| < 0.9, Pfaff for `−5 ≤ z ≤ −0.9`, the connection formula below
/// −5 and, for `0.9 ≤ z < 1`, Pfaff followed by the connection formula.
/// In the logarithmic case below −5 the Pfaff series (argument close to 1)
/// is used instead; it fails with a no-convergence error if too slow.
pub fn gauss_2f1_ext(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if [a, b, c, z].iter().any(|v| !v.is_finite()) {
        return Err(UmbraError::Domain("non-finite 2F1 input".into()));
    }
    check_denominator(a, b, c)?;
    if let Some(n) = terminating(a, b) {
        return Ok(finite_sum(a, b, c, z, n));
    }
    if z.abs() < SERIES_RADIUS {
        return gauss_2f1_series(a, b, c, z);
    }
    if z == 1.0 {
        if c - a - b > 0.0 {
            return gamma_ratio(c, c - a - b, c - a, c - b);
        }
        return Err(UmbraError::Domain("2F1 diverges at z = 1 when c − a − b ≤ 0".into()));
    }
    if z > 1.0 {
        return Err(UmbraError::Domain(format!("2F1 on the cut z > 1 (z = {z})")));
    }
    if z > 0.0 {
        let w = z / (z - 1.0);
        if !is_int(a - (c - b)) {
            return Ok((1.0 - z).powf(-a) * gauss_2f1_connection(a, c - b, c, w)?);
        }
        if !is_int(c - a - b) {
            return Ok((1.0 - z).powf(-b) * gauss_2f1_connection(c - a, b, c, w)?);
        }
        return Err(UmbraError::Degenerate("c − a − b is an integer near z = 1".into()));
    }
    if z >= -CONNECTION_THRESHOLD {
        return gauss_2f1_pfaff(a, b, c, z);
    }
    match gauss_2f1_connection(a, b, c, z) {
        Err(UmbraError::Degenerate(_)) => gauss_2f1_pfaff(a, b, c, z),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn binomial_identity() {
        assert_relative_eq!(gauss_2f1_ext(2.0, 5.0, 5.0, 0.5).unwrap(), 4.0, max_relative = 1e-14);
        // (1−z)^{−a} far out on the negative axis
        assert_relative_eq!(
            gauss_2f1_ext(0.3, 1.7, 1.7, -20.0).unwrap(),
            21f64.powf(-0.3),
            max_relative = 1e-12
        );
    }

    #[test]
    fn terminating_override() {
        let direct: f64 = (0..=3)
            .map(|k| {
                let mut t = 1.0;
                for j in 0..k {
                    let j = j as f64;
                    t *= (1.0 + j) * (-3.0 + j) / ((2.0 + j) * (j + 1.0)) * -7.0;
                }
                t
            })
            .sum();
        assert!((gauss_2f1_ext(1.0, -3.0, 2.0, -7.0).unwrap() - direct).abs() < 1e-14 * direct.abs());
    }

    #[test]
    fn degenerate_far_field() {
        // mpmath: hyp2f1(1, 2, 4, -50)
        let v = gauss_2f1_ext(1.0, 2.0, 4.0, -50.0).unwrap();
        assert_relative_eq!(v, 0.052_774_890_851_090_850_5, max_relative = 1e-8);
        assert!(matches!(
            gauss_2f1_connection(1.0, 2.0, 4.0, -50.0),
            Err(UmbraError::Degenerate(_))
        ));
    }

    #[test]
    fn method_boundaries_agree() {
        for &(a, b, c) in &[(0.3, 1.7, 2.2), (-0.6, 0.45, 1.3), (1.25, 2.5, 0.75)] {
            let s = gauss_2f1_series(a, b, c, -0.9).unwrap();
            let p = gauss_2f1_pfaff(a, b, c, -0.9).unwrap();
            assert!((s - p).abs() < 1e-8 * s.abs().max(1.0));
            let p = gauss_2f1_pfaff(a, b, c, -5.0).unwrap();
            let k = gauss_2f1_connection(a, b, c, -5.0).unwrap();
            assert!((p - k).abs() < 1e-8 * p.abs().max(1.0));
        }
    }

    #[test]
    fn gauss_sum_and_near_one() {
        // F(1/2, 1/3; 2; 1) = Γ(2)Γ(7/6)/(Γ(3/2)Γ(5/3))
        let expect = gamma_ratio(2.0, 7.0 / 6.0, 1.5, 5.0 / 3.0).unwrap();
        assert_relative_eq!(
            gauss_2f1_ext(0.5, 1.0 / 3.0, 2.0, 1.0).unwrap(),
            expect,
            max_relative = 1e-13
        );
        let near = gauss_2f1_ext(0.5, 1.0 / 3.0, 2.0, 0.999_999).unwrap();
        assert!((near - expect).abs() < 1e-4);
        assert!(gauss_2f1_ext(1.0, 1.0, 2.0, 1.5).is_err());
    }

    #[test]
    fn denominator_pole() {
        assert!(matches!(
            gauss_2f1_ext(1.0, 2.0, -2.0, 0.3),
            Err(UmbraError::Pole { .. })
        ));
        // cancelled by a shorter terminating numerator
        assert!(gauss_2f1_ext(-1.0, 2.0, -2.0, 0.3).is_ok());
    }
}
