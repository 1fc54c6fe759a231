//! Term-by-term umbral deformation of power series: `Σ c_n x^n ↦ Σ c_n [x]^n`.

use std::fmt;
use std::sync::Arc;

use num::complex::Complex64;

use crate::error::{Result, UmbraError};
use crate::specfun::{HyperSpec, MAX_SERIES_TERMS};
use crate::umbral_core::Number;

type Coefficients = Arc<dyn Fn(usize) -> Number + Send + Sync>;

/// Coefficients `c_n` of `f(x) = Σ c_n x^n`.
#[derive(Clone)]
pub struct UmbralSeries {
    coefficients: Coefficients,
    pub radius_hint: Option<f64>,
}

impl fmt::Debug for UmbralSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = (0..4).map(|n| self.coefficient(n).to_string()).collect();
        f.debug_struct("UmbralSeries")
            .field("head", &head)
            .field("radius_hint", &self.radius_hint)
            .finish()
    }
}

fn factorial(n: usize) -> Number {
    (2..=n as i64).fold(Number::one(), |acc, k| &acc * &Number::int(k))
}

impl UmbralSeries {
    pub fn from_fn(f: impl Fn(usize) -> Number + Send + Sync + 'static) -> Self {
        UmbralSeries {
            coefficients: Arc::new(f),
            radius_hint: None,
        }
    }

    pub fn with_radius(mut self, r: f64) -> Self {
        self.radius_hint = Some(r);
        self
    }

    pub fn coefficient(&self, n: usize) -> Number {
        (self.coefficients)(n)
    }

    /// `e^{λx}`: `c_n = λⁿ/n!`.
    pub fn exp(lambda: Number) -> Self {
        UmbralSeries::from_fn(move |n| {
            let p = lambda.powi(n as i64).unwrap_or_else(Number::zero);
            &p / &factorial(n)
        })
    }

    /// `1/(1−x)`: `c_n = 1`.
    pub fn geometric() -> Self {
        UmbralSeries::from_fn(|_| Number::one()).with_radius(1.0)
    }

    /// `e^{−x²}`: `c_{2m} = (−1)^m/m!`, odd coefficients zero.
    pub fn gaussian() -> Self {
        UmbralSeries::from_fn(|n| {
            if n % 2 == 1 {
                return Number::zero();
            }
            let m = n / 2;
            let sign = if m % 2 == 0 { Number::one() } else { Number::int(-1) };
            &sign / &factorial(m)
        })
    }

    /// The pFq series `Σ (α)_n/(β)_n zⁿ/n!` in powers of x, i.e. `pFq(α; β; z·x)`.
    pub fn from_hyper(spec: &HyperSpec) -> Self {
        let spec = spec.clone();
        UmbralSeries::from_fn(move |n| {
            let mut c = spec.prefactor.scalar.clone();
            for k in 0..n {
                let kk = Number::int(k as i64);
                for a in &spec.numerator {
                    c = &c * &(a + &kk);
                }
                for b in &spec.denominator {
                    c = &c / &(b + &kk);
                }
                c = &(&c * &spec.argument) / &Number::int(k as i64 + 1);
            }
            c
        })
    }

    /// Series of `f′`: `c′_n = (n+1) c_{n+1}`.
    pub fn derivative(&self) -> Self {
        let inner = self.coefficients.clone();
        UmbralSeries {
            coefficients: Arc::new(move |n| &Number::int(n as i64 + 1) * &inner(n + 1)),
            radius_hint: self.radius_hint,
        }
    }
}

/// `Σ c_n [x]^n` on the lattice of spacing `a`.
///
/// On lattice points `x = N a` the sum stops at `n = N` (the basic
/// polynomials vanish beyond) and is exact for exact input. Elsewhere the
/// terms are summed in floating point until three consecutive terms fall
/// below `tol` relative to the partial sum.
pub fn umbral_series_transform(series: &UmbralSeries, x: &Number, a: &Number, tol: f64) -> Result<Number> {
    let steps = x
        .checked_div(a)
        .ok_or_else(|| UmbraError::Lattice("zero spacing".into()))?;
    if let Some(n_max) = steps.nonnegative_integer() {
        let mut basic = Number::one();
        let mut factor = x.clone();
        let mut sum = Number::zero();
        for n in 0..=n_max as usize {
            sum = &sum + &(&series.coefficient(n) * &basic);
            basic = &basic * &factor;
            factor = &factor - a;
        }
        return Ok(sum);
    }
    let (xc, ac) = (x.to_complex(), a.to_complex());
    let mut basic = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut small = 0;
    for n in 0..MAX_SERIES_TERMS {
        let term = series.coefficient(n).to_complex() * basic;
        sum += term;
        if !sum.re.is_finite() || !sum.im.is_finite() {
            return Err(UmbraError::NoConvergence { terms: n + 1 });
        }
        if term.norm() <= tol * sum.norm() && n > 0 {
            small += 1;
            if small >= 3 {
                let real = !(x.is_complex() || a.is_complex()) && sum.im == 0.0;
                return Ok(if real {
                    Number::Real(sum.re)
                } else {
                    Number::Complex(sum)
                });
            }
        } else {
            small = 0;
        }
        basic *= xc - ac * n as f64;
    }
    Err(UmbraError::NoConvergence {
        terms: MAX_SERIES_TERMS,
    })
}
