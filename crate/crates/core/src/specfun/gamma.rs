//! Log-gamma for complex arguments, plus real gamma helpers.
//!
//! Re(z) ≥ 0.5 uses an upward shift to |z| ≥ 15 followed by the Stirling
//! series; near z = 1 and z = 2 on the real axis a ζ-series keeps relative
//! accuracy where log Γ has zeros. Re(z) < 0.5 goes through reflection.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num::complex::Complex64;

use crate::error::{Result, UmbraError};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const STIRLING_SHIFT: f64 = 15.0;

/// B_{2k} / (2k (2k−1)) for k = 1..10.
const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

const ZETA_TERMS: usize = 64;

/// ζ(k) − 1 for k = 2..=ZETA_TERMS+1, by direct summation plus an
/// Euler–Maclaurin tail.
fn zeta_minus_one() -> &'static [f64; ZETA_TERMS] {
    static TABLE: OnceLock<[f64; ZETA_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; ZETA_TERMS];
        const M: f64 = 30.0;
        for (i, slot) in out.iter_mut().enumerate() {
            let k = (i + 2) as f64;
            // Sum n = M-1 down to 2 so the small terms go first.
            let mut s = 0.0;
            let mut n = M - 1.0;
            while n >= 2.0 {
                s += n.powf(-k);
                n -= 1.0;
            }
            let mk = M.powf(-k);
            let tail = M * mk / (k - 1.0) + 0.5 * mk + k * mk / (12.0 * M)
                - k * (k + 1.0) * (k + 2.0) * mk / (720.0 * M.powi(3))
                + k * (k + 1.0) * (k + 2.0) * (k + 3.0) * (k + 4.0) * mk / (30240.0 * M.powi(5));
            *slot = s + tail;
        }
        out
    })
}

/// Σ_{k≥2} (−1)^k (ζ(k)−1) ε^k / k for |ε| ≤ 0.5.
fn zeta_series(eps: f64) -> f64 {
    let table = zeta_minus_one();
    let mut sum = 0.0;
    let mut p = eps * eps;
    for (i, z) in table.iter().enumerate() {
        let k = (i + 2) as f64;
        let term = z * p / k;
        sum += if i % 2 == 0 { term } else { -term };
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        p *= eps;
    }
    sum
}

/// log Γ(x) for real x in [0.5, 2.5], accurate relative to the value.
fn ln_gamma_near_one_two(x: f64) -> f64 {
    if x < 1.5 {
        let eps = x - 1.0;
        -eps.ln_1p() + eps * (1.0 - EULER_GAMMA) + zeta_series(eps)
    } else {
        let eps = x - 2.0;
        eps * (1.0 - EULER_GAMMA) + zeta_series(eps)
    }
}

fn stirling(w: Complex64) -> Complex64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut corr = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING_COEFFS {
        corr += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + corr
}

fn stirling_real(w: f64) -> f64 {
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for c in STIRLING_COEFFS {
        corr += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + corr
}

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if x.fract() == 0.0 {
        return 0.0;
    }
    let r = x.rem_euclid(2.0);
    if r <= 0.25 {
        (PI * r).sin()
    } else if r <= 0.75 {
        (PI * (0.5 - r)).cos()
    } else if r <= 1.25 {
        (PI * (1.0 - r)).sin()
    } else if r <= 1.75 {
        -(PI * (r - 1.5)).cos()
    } else {
        (PI * (r - 2.0)).sin()
    }
}

/// cos(πx) with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

fn sin_pi_complex(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        return Complex64::new(sin_pi(z.re), 0.0);
    }
    let (s, c) = (sin_pi(z.re), cos_pi(z.re));
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// `(ln|Γ(x)|, sign Γ(x))` for real x.
pub fn ln_gamma_real(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() {
        return Err(UmbraError::Domain("log-gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(UmbraError::pole("gamma"));
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let (l, _) = ln_gamma_real(1.0 - x)?;
        return Ok((PI.ln() - s.abs().ln() - l, s.signum()));
    }
    if x <= 2.5 {
        return Ok((ln_gamma_near_one_two(x), 1.0));
    }
    if x >= STIRLING_SHIFT {
        return Ok((stirling_real(x), 1.0));
    }
    let mut w = x;
    let mut prod = 1.0;
    while w < STIRLING_SHIFT {
        prod *= w;
        w += 1.0;
    }
    Ok((stirling_real(w) - prod.ln(), 1.0))
}

/// Principal log Γ(z): analytic in the plane cut along the negative real
/// axis, real for positive real z.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        let (l, s) = ln_gamma_real(z.re)?;
        return Ok(Complex64::new(l, if s < 0.0 { PI } else { 0.0 }));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(UmbraError::Domain("log-gamma of non-finite argument".into()));
    }
    if z.re < 0.5 {
        let s = sin_pi_complex(z);
        let l = ln_gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - l);
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < STIRLING_SHIFT {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

/// Γ(x) for real x.
pub fn gamma(x: f64) -> Result<f64> {
    if x.fract() == 0.0 && x > 0.0 && x <= 23.0 {
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return Ok(f);
    }
    let (l, s) = ln_gamma_real(x)?;
    Ok(s * l.exp())
}

/// 1/Γ(x), which is entire: zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    match ln_gamma_real(x) {
        Ok((l, s)) => s * (-l).exp(),
        Err(_) => f64::NAN,
    }
}

/// 1/Γ(z) for complex z; zero at the poles.
pub fn rgamma_complex(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        return Complex64::new(rgamma(z.re), 0.0);
    }
    match ln_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(f64::NAN, f64::NAN),
    }
}
