//! Generalized hypergeometric series pFq with optional prefactors.

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};
use crate::umbral_core::{falling_factorial, rising_factorial_inverse, umbral_power_gamma, Number};

/// Hard cap on series terms.
pub const MAX_SERIES_TERMS: usize = 100_000;
/// Consecutive small terms required before a series is declared converged.
const SMALL_RUN: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMode {
    Exact,
    Float,
}

/// Ratio-test classification of a pFq series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "class")]
pub enum ConvergenceClass {
    /// A numerator parameter equals `-n`; the series stops after term `n`.
    Terminating { n: u64 },
    /// p < q + 1: converges everywhere.
    Entire,
    /// p = q + 1 and |z| < 1.
    ConditionallyConvergent,
    /// p = q + 1 and |z| ≥ 1: needs analytic continuation.
    NeedsConnection,
    /// p > q + 1: zero radius of convergence.
    Asymptotic,
}

/// `base^exponent`, principal branch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerFactor {
    pub base: Number,
    pub exponent: Number,
}

/// `spacing^γ · Γ(steps+1)/Γ(steps−γ+1)`, the continued umbral power
/// `[x]^γ` with `steps = x/a`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaPower {
    pub steps: Number,
    pub gamma: Number,
    pub spacing: Number,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Prefactor {
    pub scalar: Number,
    pub exponential: Option<PowerFactor>,
    pub gamma_power: Option<GammaPower>,
}

impl Default for Prefactor {
    fn default() -> Self {
        Prefactor {
            scalar: Number::one(),
            exponential: None,
            gamma_power: None,
        }
    }
}

impl Prefactor {
    pub fn is_trivial(&self) -> bool {
        self.scalar == Number::one() && self.exponential.is_none() && self.gamma_power.is_none()
    }

    pub fn evaluate(&self, mode: EvalMode) -> Result<Number> {
        let mut v = self.scalar.clone();
        if let Some(pf) = &self.exponential {
            v = &v * &pf.base.powc(&pf.exponent)?;
        }
        if let Some(gp) = &self.gamma_power {
            let x = &gp.steps * &gp.spacing;
            let g = match gp.gamma.as_integer() {
                Some(k) if k >= 0 => falling_factorial(&x, &gp.spacing, k as u32),
                Some(k) => rising_factorial_inverse(&x, &gp.spacing, (-k) as u32)?,
                None => {
                    if mode == EvalMode::Exact {
                        return Err(UmbraError::Mode("non-integer umbral power has no exact value".into()));
                    }
                    umbral_power_gamma(&x, &gp.spacing, gp.gamma.to_f64())?
                }
            };
            v = &v * &g;
        }
        if mode == EvalMode::Exact && !v.is_exact() {
            return Err(UmbraError::Mode("prefactor is not exact".into()));
        }
        Ok(v)
    }
}

/// `prefactor · pFq(α₁..α_p; β₁..β_q; z)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HyperSpec {
    pub numerator: Vec<Number>,
    pub denominator: Vec<Number>,
    pub argument: Number,
    #[serde(default)]
    pub prefactor: Prefactor,
}

impl HyperSpec {
    /// Checks that no denominator parameter is a nonpositive integer unless
    /// a terminating numerator parameter stops the series first.
    pub fn new(numerator: Vec<Number>, denominator: Vec<Number>, argument: Number) -> Result<Self> {
        let spec = HyperSpec {
            numerator,
            denominator,
            argument,
            prefactor: Prefactor::default(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_prefactor(mut self, prefactor: Prefactor) -> Self {
        self.prefactor = prefactor;
        self
    }

    pub fn p(&self) -> usize {
        self.numerator.len()
    }

    pub fn q(&self) -> usize {
        self.denominator.len()
    }

    pub fn validate(&self) -> Result<()> {
        let stop = self.truncation();
        for b in &self.denominator {
            if let Some(m) = b.nonpositive_integer() {
                match stop {
                    Some(n) if n <= m => {}
                    _ => {
                        return Err(UmbraError::pole_at("pFq denominator parameter", -(m as i64)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Index of the last nonzero term when a numerator parameter is a
    /// nonpositive integer (the smallest such |α| wins).
    pub fn truncation(&self) -> Option<u64> {
        self.numerator.iter().filter_map(Number::nonpositive_integer).min()
    }

    pub fn is_exact(&self) -> bool {
        self.numerator.iter().chain(&self.denominator).all(Number::is_exact) && self.argument.is_exact()
    }

    fn is_real(&self) -> bool {
        self.numerator
            .iter()
            .chain(&self.denominator)
            .chain(std::iter::once(&self.argument))
            .all(|v| !v.is_complex())
    }
}

pub fn pfq_classify(spec: &HyperSpec) -> ConvergenceClass {
    if let Some(n) = spec.truncation() {
        return ConvergenceClass::Terminating { n };
    }
    let (p, q) = (spec.p(), spec.q());
    if p < q + 1 {
        ConvergenceClass::Entire
    } else if p == q + 1 {
        if spec.argument.abs() < 1.0 {
            ConvergenceClass::ConditionallyConvergent
        } else {
            ConvergenceClass::NeedsConnection
        }
    } else {
        ConvergenceClass::Asymptotic
    }
}

/// Evaluates `prefactor · pFq`.
///
/// Terminating series are summed exactly in exact mode (all parameters
/// exact), otherwise term by term in floating point. Convergent series stop
/// once `SMALL_RUN` consecutive terms fall below `tol · |partial sum|`.
/// Asymptotic and out-of-disk series are refused: they need an identity or
/// connection formula.
pub fn pfq_eval(spec: &HyperSpec, mode: EvalMode, tol: f64) -> Result<Number> {
    spec.validate()?;
    let class = pfq_classify(spec);
    let series = match (class, mode) {
        (ConvergenceClass::Terminating { n }, EvalMode::Exact) => {
            if !spec.is_exact() {
                return Err(UmbraError::Mode("exact evaluation needs exact parameters".into()));
            }
            terminating_exact(spec, n)
        }
        (_, EvalMode::Exact) => {
            return Err(UmbraError::Mode("exact evaluation needs a terminating series".into()));
        }
        (ConvergenceClass::Terminating { n }, EvalMode::Float) => float_result(spec, terminating_float(spec, n)),
        (ConvergenceClass::Entire | ConvergenceClass::ConditionallyConvergent, EvalMode::Float) => {
            float_result(spec, convergent_float(spec, tol)?)
        }
        (ConvergenceClass::NeedsConnection, _) => {
            return Err(UmbraError::Domain(
                "pFq with p = q+1 outside the unit disk needs a connection formula".into(),
            ));
        }
        (ConvergenceClass::Asymptotic, _) => {
            return Err(UmbraError::Domain(
                "asymptotic pFq (p > q+1) has zero radius of convergence; route through an identity".into(),
            ));
        }
    };
    if spec.prefactor.is_trivial() {
        return Ok(series);
    }
    let pre = spec.prefactor.evaluate(mode)?;
    // A vanishing prefactor kills the whole value even if the series is large.
    if pre.is_zero() {
        return Ok(pre);
    }
    Ok(&pre * &series)
}

fn float_result(spec: &HyperSpec, z: Complex64) -> Number {
    if spec.is_real() {
        Number::Real(z.re)
    } else {
        Number::Complex(z)
    }
}

fn terminating_exact(spec: &HyperSpec, n: u64) -> Number {
    let mut term = Number::one();
    let mut sum = Number::one();
    for k in 0..n {
        let kk = Number::int(k as i64);
        for a in &spec.numerator {
            term = &term * &(a + &kk);
        }
        for b in &spec.denominator {
            term = &term / &(b + &kk);
        }
        term = &(&term * &spec.argument) / &Number::int(k as i64 + 1);
        sum = &sum + &term;
    }
    sum
}

fn params_complex(v: &[Number]) -> Vec<Complex64> {
    v.iter().map(Number::to_complex).collect()
}

fn term_ratio(num: &[Complex64], den: &[Complex64], z: Complex64, k: f64) -> Complex64 {
    let mut r = z / (k + 1.0);
    for a in num {
        r *= a + k;
    }
    for b in den {
        r /= b + k;
    }
    r
}

fn terminating_float(spec: &HyperSpec, n: u64) -> Complex64 {
    let (num, den) = (params_complex(&spec.numerator), params_complex(&spec.denominator));
    let z = spec.argument.to_complex();
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..n {
        term *= term_ratio(&num, &den, z, k as f64);
        sum += term;
    }
    sum
}

fn convergent_float(spec: &HyperSpec, tol: f64) -> Result<Complex64> {
    let (num, den) = (params_complex(&spec.numerator), params_complex(&spec.denominator));
    let z = spec.argument.to_complex();
    sum_series(|k, t| t * term_ratio(&num, &den, z, k as f64), tol)
}

/// Sums `Σ t_k` with `t_0 = 1` and `t_{k+1} = next(k, t_k)`.
pub(crate) fn sum_series(mut next: impl FnMut(usize, Complex64) -> Complex64, tol: f64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for k in 0..MAX_SERIES_TERMS {
        term = next(k, term);
        sum += term;
        if !sum.re.is_finite() || !sum.im.is_finite() {
            return Err(UmbraError::NoConvergence { terms: k + 1 });
        }
        if term.norm() <= tol * sum.norm() {
            small += 1;
            if small >= SMALL_RUN {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(UmbraError::NoConvergence {
        terms: MAX_SERIES_TERMS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn n(v: i64) -> Number {
        Number::int(v)
    }

    #[test]
    fn classify_examples() {
        let s = HyperSpec::new(vec![n(1), n(-2)], vec![n(1)], Number::real(0.3)).unwrap();
        assert_eq!(pfq_classify(&s), ConvergenceClass::Terminating { n: 2 });
        let s = HyperSpec::new(vec![Number::real(0.5), Number::real(0.25)], vec![], Number::real(-1.0)).unwrap();
        assert_eq!(pfq_classify(&s), ConvergenceClass::Asymptotic);
        let s = HyperSpec::new(vec![], vec![Number::ratio(2, 3)], Number::real(50.0)).unwrap();
        assert_eq!(pfq_classify(&s), ConvergenceClass::Entire);
        let s = HyperSpec::new(vec![n(1), Number::real(0.5)], vec![n(3)], Number::real(-0.5)).unwrap();
        assert_eq!(pfq_classify(&s), ConvergenceClass::ConditionallyConvergent);
        let s = HyperSpec::new(vec![n(1), Number::real(0.5)], vec![n(3)], Number::real(-2.0)).unwrap();
        assert_eq!(pfq_classify(&s), ConvergenceClass::NeedsConnection);
    }

    #[test]
    fn smallest_terminating_parameter_wins() {
        let s = HyperSpec::new(vec![n(-5), n(-2), n(3)], vec![], n(1)).unwrap();
        assert_eq!(s.truncation(), Some(2));
    }

    #[test]
    fn denominator_pole_rules() {
        assert!(HyperSpec::new(vec![n(1)], vec![n(-2)], n(1)).is_err());
        // cancelled by an earlier termination
        assert!(HyperSpec::new(vec![n(-2)], vec![n(-3)], n(1)).is_ok());
        assert!(HyperSpec::new(vec![n(-4)], vec![n(-3)], n(1)).is_err());
    }

    #[test]
    fn eval_examples() {
        let s = HyperSpec::new(vec![n(3)], vec![n(3)], n(1)).unwrap();
        let v = pfq_eval(&s, EvalMode::Float, 1e-16).unwrap();
        assert_relative_eq!(v.to_f64(), std::f64::consts::E, max_relative = 1e-15);

        let s = HyperSpec::new(vec![n(1), n(-2)], vec![n(1)], n(-1)).unwrap();
        assert_eq!(pfq_eval(&s, EvalMode::Exact, 0.0).unwrap(), n(4));
        assert_eq!(pfq_eval(&s, EvalMode::Float, 0.0).unwrap(), Number::Real(4.0));

        let s = HyperSpec::new(vec![], vec![Number::ratio(2, 3)], n(0)).unwrap();
        assert_eq!(pfq_eval(&s, EvalMode::Float, 1e-16).unwrap(), Number::Real(1.0));
    }

    #[test]
    fn mode_and_domain_errors() {
        let s = HyperSpec::new(vec![n(3)], vec![n(3)], n(1)).unwrap();
        assert!(matches!(pfq_eval(&s, EvalMode::Exact, 1e-16), Err(UmbraError::Mode(_))));
        let s = HyperSpec::new(vec![Number::real(-2.0)], vec![n(3)], n(1)).unwrap();
        assert!(matches!(pfq_eval(&s, EvalMode::Exact, 1e-16), Err(UmbraError::Mode(_))));
        let s = HyperSpec::new(vec![Number::real(0.5), Number::real(0.5)], vec![], n(1)).unwrap();
        assert!(matches!(
            pfq_eval(&s, EvalMode::Float, 1e-16),
            Err(UmbraError::Domain(_))
        ));
        let s = HyperSpec::new(vec![n(1), n(1)], vec![n(2)], n(-3)).unwrap();
        assert!(matches!(
            pfq_eval(&s, EvalMode::Float, 1e-16),
            Err(UmbraError::Domain(_))
        ));
    }

    #[test]
    fn slow_series_hits_the_cap() {
        // 2F1(1,1;2;z) = −ln(1−z)/z, at |z| just under 1 the terms decay like z^k/k
        let s = HyperSpec::new(vec![n(1), n(1)], vec![n(2)], Number::real(0.99999)).unwrap();
        assert_eq!(
            pfq_eval(&s, EvalMode::Float, 1e-16),
            Err(UmbraError::NoConvergence {
                terms: MAX_SERIES_TERMS
            })
        );
    }

    #[test]
    fn prefactor_applies() {
        let pre = Prefactor {
            scalar: n(3),
            exponential: Some(PowerFactor {
                base: Number::ratio(1, 2),
                exponent: n(2),
            }),
            gamma_power: Some(GammaPower {
                steps: n(4),
                gamma: n(2),
                spacing: Number::ratio(1, 2),
            }),
        };
        // 3 · (1/2)² · [2]² with a = 1/2 = 3/4 · 2·(3/2) = 9/4
        let s = HyperSpec::new(vec![n(0)], vec![], n(7)).unwrap().with_prefactor(pre);
        assert_eq!(pfq_eval(&s, EvalMode::Exact, 0.0).unwrap(), Number::ratio(9, 4));
    }

    #[test]
    fn complex_parameters_give_complex_values() {
        // 1F1(a; a; z) = e^z for complex z
        let z = Complex64::new(0.3, 0.8);
        let s = HyperSpec::new(vec![Number::real(1.7)], vec![Number::real(1.7)], Number::Complex(z)).unwrap();
        let v = pfq_eval(&s, EvalMode::Float, 1e-16).unwrap().to_complex();
        assert!((v - z.exp()).norm() < 1e-14);
    }
}
