//! Fourier-functional umbral transform
//! `F(x) = ∫ dω/2π f̂(ω) (1+iωa)^{x/a}`, with `f̂(ω) = ∫ f(τ) e^{−iωτ} dτ`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num::complex::Complex64;

use crate::error::{Result, UmbraError};
use crate::quad::{integrate, integrate_breakpoints, QuadBudget};
use crate::specfun::incomplete_gamma_upper;

type SpectrumFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;
type SignalFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// How `f̂` is supplied.
#[derive(Clone)]
pub enum Spectrum {
    /// `f = e^{iω₀t}`, `f̂ = 2π δ(ω − ω₀)`.
    PlaneWave { omega: f64 },
    /// `f = δ(t)`, `f̂ = 1`; evaluated as the band-limited phase integral
    /// `(1/2πa) ∫_{−π/2}^{π/2} e^{i(x/a+1)θ} dθ`.
    Delta,
    /// Closed-form `f̂`, integrated over the whole ω axis.
    Analytic(SpectrumFn),
    /// `f` sampled on `[−half_width, half_width]`, transformed numerically,
    /// and the ω integral cut at `±omega_max`.
    Numerical {
        f: SignalFn,
        half_width: f64,
        omega_max: f64,
    },
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spectrum::PlaneWave { omega } => write!(f, "PlaneWave {{ omega: {omega} }}"),
            Spectrum::Delta => write!(f, "Delta"),
            Spectrum::Analytic(_) => write!(f, "Analytic(..)"),
            Spectrum::Numerical {
                half_width, omega_max, ..
            } => write!(f, "Numerical {{ half_width: {half_width}, omega_max: {omega_max} }}"),
        }
    }
}

impl Spectrum {
    /// `e^{−t²}`: `f̂(ω) = √π e^{−ω²/4}`.
    pub fn gaussian() -> Self {
        Spectrum::Analytic(Arc::new(|w: f64| Complex64::new(PI.sqrt() * (-w * w / 4.0).exp(), 0.0)))
    }

    pub fn analytic(f: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        Spectrum::Analytic(Arc::new(f))
    }

    pub fn numerical(f: impl Fn(f64) -> f64 + Send + Sync + 'static, half_width: f64, omega_max: f64) -> Self {
        Spectrum::Numerical {
            f: Arc::new(f),
            half_width,
            omega_max,
        }
    }
}

/// Tolerance floor for the nested numerical route.
pub const NUMERICAL_SPECTRUM_TOL: f64 = 1e-5;

fn kernel(w: f64, steps: f64, a: f64) -> Complex64 {
    Complex64::new(1.0, w * a).powf(steps)
}

/// `sin(π(1+x/a)/2) / (π(a+x))`, the closed-form image of δ.
pub fn sampling_function(x: f64, a: f64) -> f64 {
    let s = x / a + 1.0;
    if s == 0.0 {
        return 1.0 / (2.0 * a);
    }
    (PI * s / 2.0).sin() / (PI * a * s)
}

pub fn fourier_umbral_transform(spectrum: &Spectrum, x: f64, a: f64, budget: QuadBudget) -> Result<Complex64> {
    if a == 0.0 || !a.is_finite() || !x.is_finite() {
        return Err(UmbraError::Lattice(format!("invalid spacing {a} or point {x}")));
    }
    let steps = x / a;
    match spectrum {
        Spectrum::PlaneWave { omega } => Ok(kernel(*omega, steps, a)),
        Spectrum::Delta => {
            let s = steps + 1.0;
            let q = integrate(|t| Complex64::from_polar(1.0, s * t), -PI / 2.0, PI / 2.0, budget)?;
            Ok(q.value / (2.0 * PI * a))
        }
        Spectrum::Analytic(fhat) => {
            // ω = u/(1−u²) maps (−1, 1) onto the real line.
            let g = |u: f64| {
                let d = 1.0 - u * u;
                let w = u / d;
                let jac = (1.0 + u * u) / (d * d);
                let v = fhat(w) * kernel(w, steps, a) * jac;
                if v.re.is_finite() && v.im.is_finite() {
                    v
                } else {
                    Complex64::new(0.0, 0.0)
                }
            };
            let points: Vec<f64> = (0..=16).map(|k| -1.0 + k as f64 / 8.0).collect();
            let q = integrate_breakpoints(g, &points, budget)?;
            Ok(q.value / (2.0 * PI))
        }
        Spectrum::Numerical {
            f,
            half_width,
            omega_max,
        } => {
            let inner = QuadBudget {
                abs_tol: budget.abs_tol.max(NUMERICAL_SPECTRUM_TOL * 1e-3),
                rel_tol: budget.rel_tol.max(NUMERICAL_SPECTRUM_TOL * 1e-2),
                max_intervals: budget.max_intervals,
            };
            let fhat = |w: f64| -> Complex64 {
                integrate(|t| Complex64::from_polar(f(t), -w * t), -half_width, *half_width, inner)
                    .map(|q| q.value)
                    .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
            };
            let outer = QuadBudget {
                abs_tol: budget.abs_tol.max(NUMERICAL_SPECTRUM_TOL),
                rel_tol: budget.rel_tol.max(NUMERICAL_SPECTRUM_TOL),
                max_intervals: budget.max_intervals,
            };
            let q = integrate(|w| fhat(w) * kernel(w, steps, a), -omega_max, *omega_max, outer)?;
            if !q.value.re.is_finite() {
                return Err(UmbraError::QuadratureBudget {
                    estimate: f64::INFINITY,
                });
            }
            Ok(q.value / (2.0 * PI))
        }
    }
}

/// Umbral image of `1/(1−t)`: `e^{1/a} a^{t/a} Γ(t/a+1, 1/a)`.
pub fn rational_geom_transform(t: f64, a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(UmbraError::Lattice(format!("spacing must be positive, got {a}")));
    }
    let s = t / a;
    if !(s > -1.0) {
        return Err(UmbraError::Domain(format!("t/a must exceed −1, got {s}")));
    }
    let g = incomplete_gamma_upper(s + 1.0, 1.0 / a)?;
    Ok((1.0 / a + s * a.ln()).exp() * g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn delta_is_sampling_function() {
        for &(x, a) in &[
            (0.0, 1.0),
            (1.0, 1.0),
            (0.5, 1.0),
            (2.0, 1.0),
            (-0.5, 1.0),
            (0.825, 0.25),
        ] {
            let q = fourier_umbral_transform(&Spectrum::Delta, x, a, QuadBudget::default()).unwrap();
            assert!((q.re - sampling_function(x, a)).abs() < 1e-10);
            assert!(q.im.abs() < 1e-10);
        }
        assert_relative_eq!(sampling_function(0.0, 1.0), 1.0 / PI, max_relative = 1e-15);
        assert!(sampling_function(1.0, 1.0).abs() < 1e-16);
        // mpmath: s = 3.3
        assert_relative_eq!(
            sampling_function(3.3, 1.0),
            0.033_606_898_674_562_166,
            max_relative = 1e-13
        );
    }

    #[test]
    fn plane_wave() {
        for &w in &[0.5, 1.0, 2.0] {
            for &a in &[0.25, 1.0] {
                let v =
                    fourier_umbral_transform(&Spectrum::PlaneWave { omega: w }, 1.3, a, QuadBudget::default()).unwrap();
                let e = Complex64::new(1.0, w * a).powf(1.3 / a);
                assert!((v - e).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn gaussian_matches_reference() {
        // G(1, 1/4) = 19/64 exactly on the lattice
        let v = fourier_umbral_transform(&Spectrum::gaussian(), 1.0, 0.25, QuadBudget::default()).unwrap();
        assert!((v.re - 19.0 / 64.0).abs() < 1e-9);
        assert!(v.im.abs() < 1e-9);
        // mpmath: G(0.3, 1/4) via the U identity
        let v = fourier_umbral_transform(&Spectrum::gaussian(), 0.3, 0.25, QuadBudget::default()).unwrap();
        assert_relative_eq!(v.re, 0.985_566_477_727_716_86, max_relative = 1e-9);
    }

    #[test]
    fn numerical_spectrum_route() {
        let s = Spectrum::numerical(|t| (-t * t).exp(), 7.0, 14.0);
        let v = fourier_umbral_transform(&s, 1.0, 0.25, QuadBudget::default()).unwrap();
        assert!((v.re - 19.0 / 64.0).abs() < 1e-5);
    }

    #[test]
    fn geometric_image() {
        assert_relative_eq!(rational_geom_transform(0.0, 1.0).unwrap(), 1.0, max_relative = 1e-13);
        assert_relative_eq!(rational_geom_transform(1.0, 1.0).unwrap(), 2.0, max_relative = 1e-13);
        assert_relative_eq!(rational_geom_transform(2.0, 1.0).unwrap(), 5.0, max_relative = 1e-13);
        assert!(rational_geom_transform(-1.0, 1.0).is_err());
    }
}
