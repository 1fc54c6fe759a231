//! Linear difference operators `Σ cᵢ(x) (Δ^{mᵢ} F)(x + jᵢa)` applied to grids.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Result, UmbraError};
use crate::umbral_core::{forward_difference, GridFunction, Number};

type Coefficient = Arc<dyn Fn(&Number) -> Number + Send + Sync>;

#[derive(Clone)]
pub struct OperatorTerm {
    pub coefficient: Coefficient,
    pub shift: usize,
    pub order: usize,
}

impl fmt::Debug for OperatorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c(x)·Δ^{}·T^{}", self.order, self.shift)
    }
}

#[derive(Clone, Debug, Default)]
pub struct DifferenceOperatorSpec {
    pub terms: Vec<OperatorTerm>,
}

impl DifferenceOperatorSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::new().term(|_| Number::one(), 0, 0)
    }

    /// Adds `c(x) (Δ^order F)(x + shift·a)`.
    pub fn term(mut self, c: impl Fn(&Number) -> Number + Send + Sync + 'static, shift: usize, order: usize) -> Self {
        self.terms.push(OperatorTerm {
            coefficient: Arc::new(c),
            shift,
            order,
        });
        self
    }

    pub fn constant(self, c: Number, shift: usize, order: usize) -> Self {
        self.term(move |_| c.clone(), shift, order)
    }

    /// Trailing samples consumed: `max(jᵢ + mᵢ)`.
    pub fn reach(&self) -> usize {
        self.terms.iter().map(|t| t.shift + t.order).max().unwrap_or(0)
    }
}

/// Pointwise application; the result has `reach()` fewer samples than `f`.
pub fn apply_operator(op: &DifferenceOperatorSpec, f: &GridFunction) -> Result<GridFunction> {
    let reach = op.reach();
    if f.len() <= reach {
        return Err(UmbraError::InsufficientSamples {
            needed: reach + 1,
            available: f.len(),
        });
    }
    let len = f.len() - reach;
    let max_order = op.terms.iter().map(|t| t.order).max().unwrap_or(0);
    let mut diffs = vec![f.clone()];
    for m in 1..=max_order {
        diffs.push(forward_difference(&diffs[m - 1], 1)?);
    }
    let samples = (0..len)
        .map(|i| {
            let x = f.point(i);
            op.terms.iter().fold(Number::zero(), |acc, t| {
                let v = &diffs[t.order].samples()[i + t.shift];
                &acc + &(&(t.coefficient)(&x) * v)
            })
        })
        .collect();
    Ok(GridFunction::new(f.lattice().clone(), f.origin().clone(), samples))
}

/// Magnitudes of a residual grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualReport {
    pub max_abs: f64,
    pub location: usize,
    pub per_point: Vec<f64>,
    /// `max |F|` over the window the residual was built from.
    pub scale: f64,
    /// Every residual sample is an exact zero.
    pub exact_zero: bool,
}

impl ResidualReport {
    pub fn from_residual(residual: &GridFunction, operand: &GridFunction) -> Self {
        let per_point: Vec<f64> = residual.samples().iter().map(Number::abs).collect();
        let scale = operand.samples().iter().map(Number::abs).fold(0.0, f64::max);
        Self::from_parts(
            per_point,
            scale,
            residual.samples().iter().all(|v| v.is_exact() && v.is_zero()),
        )
    }

    pub fn from_parts(per_point: Vec<f64>, scale: f64, exact_zero: bool) -> Self {
        let (location, max_abs) =
            per_point.iter().enumerate().fold(
                (0, 0.0f64),
                |(j, m), (i, &v)| if v > m || v.is_nan() { (i, v) } else { (j, m) },
            );
        ResidualReport {
            max_abs,
            location,
            per_point,
            scale,
            exact_zero,
        }
    }

    /// `max_abs / max |F|`.
    pub fn relative(&self) -> f64 {
        if self.scale > 0.0 {
            self.max_abs / self.scale
        } else {
            self.max_abs
        }
    }
}
