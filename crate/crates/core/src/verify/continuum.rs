//! Continuum-limit checks: deviation of a lattice family from its a → 0 limit.

use serde::Serialize;

use crate::error::{Result, UmbraError};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContinuumRow {
    pub a: f64,
    pub max_deviation: f64,
    pub location: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContinuumTable {
    pub rows: Vec<ContinuumRow>,
    /// Deviations strictly decrease along the schedule.
    pub monotone: bool,
}

/// `max_x |family(x, a) − reference(x)|` for each `a` in `schedule`.
pub fn continuum_limit_check<F, R>(family: F, reference: R, xs: &[f64], schedule: &[f64]) -> Result<ContinuumTable>
where
    F: Fn(f64, f64) -> Result<f64>,
    R: Fn(f64) -> Result<f64>,
{
    if schedule.is_empty() || xs.is_empty() {
        return Err(UmbraError::Precondition("empty schedule or point set".into()));
    }
    if schedule.iter().any(|&a| !(a > 0.0)) || schedule.windows(2).any(|w| w[1] >= w[0]) {
        return Err(UmbraError::Precondition(
            "schedule must be positive and strictly decreasing".into(),
        ));
    }
    let refs = xs.iter().map(|&x| reference(x)).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(schedule.len());
    for &a in schedule {
        let mut row = ContinuumRow {
            a,
            max_deviation: 0.0,
            location: xs[0],
        };
        for (&x, &r) in xs.iter().zip(&refs) {
            let d = (family(x, a)? - r).abs();
            if d > row.max_deviation || d.is_nan() {
                row.max_deviation = d;
                row.location = x;
            }
        }
        rows.push(row);
    }
    let monotone = rows.windows(2).all(|w| w[1].max_deviation < w[0].max_deviation);
    Ok(ContinuumTable { rows, monotone })
}

/// `a = 2^{−k}` for `k = first..=last`.
pub fn dyadic_schedule(first: i32, last: i32) -> Vec<f64> {
    (first..=last).map(|k| 0.5f64.powi(k)).collect()
}

/// `n + 1` equally spaced points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 0 {
        return vec![lo];
    }
    (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect()
}
