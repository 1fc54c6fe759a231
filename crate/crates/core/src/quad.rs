//! Numerical quadrature: adaptive Gauss–Kronrod (7/15) on finite intervals
//! for complex-valued integrands, and exp-sinh on `[0, ∞)` for real ones.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Limits for an adaptive integration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadBudget {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadBudget {
    fn default() -> Self {
        QuadBudget {
            abs_tol: 1e-13,
            rel_tol: 1e-11,
            max_intervals: 4000,
        }
    }
}

impl QuadBudget {
    pub fn with_tol(abs_tol: f64, rel_tol: f64) -> Self {
        QuadBudget {
            abs_tol,
            rel_tol,
            ..Default::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
}

struct Segment {
    lo: f64,
    hi: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> Complex64>(f: &F, lo: f64, hi: f64) -> (Complex64, f64) {
    let centre = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(centre);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for (j, (&x, &w)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let dx = half * x;
        let pair = f(centre - dx) + f(centre + dx);
        k += pair * w;
        if j % 2 == 1 {
            g += pair * WG[j / 2];
        }
    }
    (k * half, ((k - g) * half).norm())
}

/// Adaptive G7K15 on `[lo, hi]`, bisecting the worst segment until the total
/// error estimate meets `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, lo: f64, hi: f64, budget: QuadBudget) -> Result<QuadResult> {
    integrate_breakpoints(f, &[lo, hi], budget)
}

/// Like [`integrate`], starting from the given breakpoints.
pub fn integrate_breakpoints<F: Fn(f64) -> Complex64>(f: F, points: &[f64], budget: QuadBudget) -> Result<QuadResult> {
    if points.len() < 2 {
        return Ok(QuadResult {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
            evaluations: 0,
        });
    }
    let mut heap = BinaryHeap::new();
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut evaluations = 0;
    for w in points.windows(2) {
        let (v, e) = kronrod(&f, w[0], w[1]);
        evaluations += 15;
        total += v;
        err += e;
        heap.push(Segment {
            lo: w[0],
            hi: w[1],
            value: v,
            error: e,
        });
    }
    while err > budget.abs_tol.max(budget.rel_tol * total.norm()) {
        if heap.len() >= budget.max_intervals {
            return Err(UmbraError::QuadratureBudget { estimate: err });
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            // Interval cannot be split further in double precision.
            return Err(UmbraError::QuadratureBudget { estimate: err });
        }
        let (v1, e1) = kronrod(&f, worst.lo, mid);
        let (v2, e2) = kronrod(&f, mid, worst.hi);
        evaluations += 30;
        total += v1 + v2 - worst.value;
        err += e1 + e2 - worst.error;
        heap.push(Segment {
            lo: worst.lo,
            hi: mid,
            value: v1,
            error: e1,
        });
        heap.push(Segment {
            lo: mid,
            hi: worst.hi,
            value: v2,
            error: e2,
        });
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(UmbraError::QuadratureBudget {
                estimate: f64::INFINITY,
            });
        }
    }
    // Re-sum to shed the drift of the running total.
    let value = heap.iter().fold(Complex64::new(0.0, 0.0), |acc, s| acc + s.value);
    let error = heap.iter().map(|s| s.error).sum();
    Ok(QuadResult {
        value,
        error,
        evaluations,
    })
}

/// ∫₀^∞ f(t) dt by the exp-sinh rule `t = exp(π/2·sinh s)`, refining the
/// step until successive trapezoid sums agree to `rel_tol`.
///
/// Suited to integrands with an integrable endpoint singularity at 0 and
/// exponential decay at infinity.
pub fn integrate_half_line<F: Fn(f64) -> f64>(f: F, rel_tol: f64) -> Result<f64> {
    const HALF_PI: f64 = std::f64::consts::FRAC_PI_2;
    let node = |s: f64| {
        let t = (HALF_PI * s.sinh()).exp();
        let w = t * HALF_PI * s.cosh();
        if t == 0.0 || !t.is_finite() || !w.is_finite() {
            return 0.0;
        }
        let v = f(t) * w;
        if v.is_finite() {
            v
        } else {
            f64::NAN
        }
    };
    // Trapezoid sum over s ∈ [−S, S] with S wide enough for double decay.
    let s_max = 4.5;
    let mut h = 0.5;
    let mut sum = node(0.0);
    let mut k = 1;
    while (k as f64) * h <= s_max {
        sum += node(k as f64 * h) + node(-(k as f64) * h);
        k += 1;
    }
    let mut estimate = sum * h;
    for _ in 0..10 {
        h *= 0.5;
        let mut add = 0.0;
        let mut k = 1;
        while (k as f64) * h <= s_max {
            add += node(k as f64 * h) + node(-(k as f64) * h);
            k += 2;
        }
        sum += add;
        let next = sum * h;
        if next.is_nan() {
            return Err(UmbraError::QuadratureBudget { estimate: f64::NAN });
        }
        let diff = (next - estimate).abs();
        estimate = next;
        if diff <= rel_tol * estimate.abs() || diff < 1e-300 {
            return Ok(estimate);
        }
    }
    Err(UmbraError::QuadratureBudget {
        estimate: estimate.abs() * rel_tol,
    })
}
