//! Umbral images of `x^γ e^{λx} pFq(α; β; c·x^k)` as hypergeometric specs.
//!
//! `x ↦ xT⁻¹` turns `x^{kn}` into a basic polynomial, which folds into k new
//! numerator parameters `(j + γ − x/a)/k`, an argument `c·(−ak/(1+aλ))^k`,
//! and a prefactor `(1+aλ)^{x/a−γ} a^γ Γ(x/a+1)/Γ(x/a−γ+1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};
use crate::specfun::{GammaPower, HyperSpec, PowerFactor, Prefactor};
use crate::umbral_core::Number;

/// `x^γ e^{λx} F(c·x^k)` with `F` given by `hyper` (its `argument` is the
/// coefficient `c`), mapped onto the lattice of spacing `a` at the point `x`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaInput {
    pub gamma_exp: Number,
    pub lambda_exp: Number,
    pub k: u32,
    pub hyper: HyperSpec,
    pub a: Number,
    pub x: Number,
}

impl LemmaInput {
    /// Plain `pFq(α; β; c·x)`.
    pub fn plain(hyper: HyperSpec, a: Number, x: Number) -> Self {
        LemmaInput {
            gamma_exp: Number::zero(),
            lambda_exp: Number::zero(),
            k: 1,
            hyper,
            a,
            x,
        }
    }

    pub fn with_power_argument(mut self, k: u32) -> Self {
        self.k = k;
        self
    }

    pub fn with_exponential(mut self, lambda: Number) -> Self {
        self.lambda_exp = lambda;
        self
    }

    pub fn with_overall_power(mut self, gamma: Number) -> Self {
        self.gamma_exp = gamma;
        self
    }

    fn steps(&self) -> Result<Number> {
        self.x
            .checked_div(&self.a)
            .ok_or_else(|| UmbraError::Lattice("zero spacing".into()))
    }

    fn check(&self) -> Result<()> {
        if self.k == 0 {
            return Err(UmbraError::Precondition("argument power k must be ≥ 1".into()));
        }
        if self.hyper.prefactor.exponential.is_some() || self.hyper.prefactor.gamma_power.is_some() {
            return Err(UmbraError::Precondition(
                "input spec may carry only a scalar prefactor".into(),
            ));
        }
        Ok(())
    }
}

fn growth_base(input: &LemmaInput) -> Result<Number> {
    let base = &Number::one() + &(&input.a * &input.lambda_exp);
    if base.is_zero() {
        return Err(UmbraError::Domain("1 + aλ = 0".into()));
    }
    Ok(base)
}

fn power_argument(c: &Number, a: &Number, k: u32, base: Option<&Number>) -> Result<Number> {
    let kk = Number::int(k as i64);
    let mut inner = -(a * &kk);
    if let Some(b) = base {
        inner = &inner / b;
    }
    let p = inner
        .powi(k as i64)
        .ok_or_else(|| UmbraError::Domain("zero base to a power".into()))?;
    Ok(c * &p)
}

fn assemble(input: &LemmaInput, extra: Vec<Number>, argument: Number, prefactor: Prefactor) -> Result<HyperSpec> {
    let mut numerator = input.hyper.numerator.clone();
    numerator.extend(extra);
    let spec = HyperSpec {
        numerator,
        denominator: input.hyper.denominator.clone(),
        argument,
        prefactor,
    };
    spec.validate()?;
    Ok(spec)
}

/// `pFq(α; β; c·x) ↦ p+1Fq(α, −x/a; β; −ca)`.
pub fn hyper_map_basic(input: &LemmaInput) -> Result<HyperSpec> {
    input.check()?;
    let s = input.steps()?;
    let arg = &input.hyper.argument * &-input.a.clone();
    let prefactor = Prefactor {
        scalar: input.hyper.prefactor.scalar.clone(),
        ..Default::default()
    };
    assemble(input, vec![-s], arg, prefactor)
}

/// `pFq(α; β; c·x^k) ↦ p+kFq(α, (j − x/a)/k; β; c(−ak)^k)`.
pub fn hyper_map_power_argument(input: &LemmaInput) -> Result<HyperSpec> {
    input.check()?;
    let s = input.steps()?;
    let kk = Number::int(input.k as i64);
    let extra = (0..input.k).map(|j| &(&Number::int(j as i64) - &s) / &kk).collect();
    let arg = power_argument(&input.hyper.argument, &input.a, input.k, None)?;
    let prefactor = Prefactor {
        scalar: input.hyper.prefactor.scalar.clone(),
        ..Default::default()
    };
    assemble(input, extra, arg, prefactor)
}

/// `e^{λx} pFq(α; β; c·x^k) ↦ (1+aλ)^{x/a} p+kFq(α, (j − x/a)/k; β; c(−ak/(1+aλ))^k)`.
pub fn hyper_map_exponential(input: &LemmaInput) -> Result<HyperSpec> {
    input.check()?;
    let s = input.steps()?;
    let base = growth_base(input)?;
    let kk = Number::int(input.k as i64);
    let extra = (0..input.k).map(|j| &(&Number::int(j as i64) - &s) / &kk).collect();
    let arg = power_argument(&input.hyper.argument, &input.a, input.k, Some(&base))?;
    let prefactor = Prefactor {
        scalar: input.hyper.prefactor.scalar.clone(),
        exponential: (!input.lambda_exp.is_zero()).then(|| PowerFactor {
            base: base.clone(),
            exponent: s.clone(),
        }),
        gamma_power: None,
    };
    assemble(input, extra, arg, prefactor)
}

/// The general map for `x^γ e^{λx} pFq(α; β; c·x^k)`:
///
/// `a^γ Γ(x/a+1)/Γ(x/a−γ+1) (1+aλ)^{x/a−γ}
///  p+kFq(α, (j + γ − x/a)/k; β; c(−ak/(1+aλ))^k)`.
///
/// Trivial factors are dropped (γ = 0 gives no gamma power, λ = 0 no
/// exponential) so the special cases come out identical to
/// [`hyper_map_exponential`], [`hyper_map_power_argument`] and
/// [`hyper_map_basic`].
pub fn umbral_hyper_map(input: &LemmaInput) -> Result<HyperSpec> {
    input.check()?;
    let s = input.steps()?;
    let base = growth_base(input)?;
    let kk = Number::int(input.k as i64);
    let shifted = &input.gamma_exp - &s;
    let extra: Vec<Number> = (0..input.k)
        .map(|j| {
            if j == 0 && input.k == 1 {
                shifted.clone()
            } else {
                &(&Number::int(j as i64) + &shifted) / &kk
            }
        })
        .collect();
    let lambda_trivial = input.lambda_exp.is_zero();
    let arg = if input.k == 1 && lambda_trivial {
        &input.hyper.argument * &-input.a.clone()
    } else {
        power_argument(
            &input.hyper.argument,
            &input.a,
            input.k,
            (!lambda_trivial).then_some(&base),
        )?
    };
    let gamma_trivial = input.gamma_exp.is_zero();
    let prefactor = Prefactor {
        scalar: input.hyper.prefactor.scalar.clone(),
        exponential: (!lambda_trivial).then(|| PowerFactor {
            base: base.clone(),
            exponent: if gamma_trivial {
                s.clone()
            } else {
                &s - &input.gamma_exp
            },
        }),
        gamma_power: (!gamma_trivial).then(|| GammaPower {
            steps: s.clone(),
            gamma: input.gamma_exp.clone(),
            spacing: input.a.clone(),
        }),
    };
    assemble(input, extra, arg, prefactor)
}
