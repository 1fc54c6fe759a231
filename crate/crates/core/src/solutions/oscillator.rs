//! The umbral harmonic oscillator `ΔX = P, ΔP = −X`: discrete phase-space
//! spirals with frequency `arctan(a)/a` and radius growing as `(1+a²)^{t/2a}`.

use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};
use crate::umbral_core::{umbral_trig, GridFunction, Lattice, Number};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OscillatorState {
    pub x: Number,
    pub p: Number,
    pub t: Number,
    pub a: Number,
}

impl OscillatorState {
    pub fn new(x: Number, p: Number, a: Number) -> Self {
        OscillatorState {
            x,
            p,
            t: Number::zero(),
            a,
        }
    }
}

/// `arctan(a)/a`.
pub fn oscillator_frequency(a: f64) -> f64 {
    if a == 0.0 {
        1.0
    } else {
        a.atan() / a
    }
}

/// `ℰ = ½(X² + P²)(1+a²)^{−t/a}`, exact for exact states on the lattice.
pub fn oscillator_energy(state: &OscillatorState) -> Result<Number> {
    let radius2 = &(&state.x * &state.x) + &(&state.p * &state.p);
    let base = &Number::one() + &(&state.a * &state.a);
    let steps = state
        .t
        .checked_div(&state.a)
        .ok_or_else(|| UmbraError::Lattice("zero spacing".into()))?;
    let decay = base.powc(&-steps)?;
    Ok(&(&radius2 * &decay) / &Number::int(2))
}

/// State at time `t`: `X = X₀Cos[τ] + P₀Sin[τ]`, `P = P₀Cos[τ] − X₀Sin[τ]`
/// with `τ = t − t₀`.
pub fn oscillator_evolve(state0: &OscillatorState, t: &Number) -> Result<OscillatorState> {
    let elapsed = t - &state0.t;
    let (sin, cos) = umbral_trig(&elapsed, &state0.a)?;
    Ok(OscillatorState {
        x: &(&state0.x * &cos) + &(&state0.p * &sin),
        p: &(&state0.p * &cos) - &(&state0.x * &sin),
        t: t.clone(),
        a: state0.a.clone(),
    })
}

/// The same evolution in polar form,
/// `(1+a²)^{τ/2a} (X₀ cos ωτ + P₀ sin ωτ, P₀ cos ωτ − X₀ sin ωτ)`.
pub fn oscillator_evolve_polar(state0: &OscillatorState, t: f64) -> (f64, f64) {
    let (x0, p0, a) = (state0.x.to_f64(), state0.p.to_f64(), state0.a.to_f64());
    let tau = t - state0.t.to_f64();
    let radius = (1.0 + a * a).powf(tau / (2.0 * a));
    let (s, c) = (oscillator_frequency(a) * tau).sin_cos();
    (radius * (x0 * c + p0 * s), radius * (p0 * c - x0 * s))
}

/// `X` and `P` on `steps + 1` consecutive lattice times from `state0`.
pub fn oscillator_grid(state0: &OscillatorState, steps: usize) -> Result<(GridFunction, GridFunction)> {
    let lattice = Lattice::new(state0.a.clone())?;
    let mut xs = Vec::with_capacity(steps + 1);
    let mut ps = Vec::with_capacity(steps + 1);
    for j in 0..=steps as i64 {
        let s = oscillator_evolve(state0, &lattice.point(&state0.t, j))?;
        xs.push(s.x);
        ps.push(s.p);
    }
    Ok((
        GridFunction::new(lattice.clone(), state0.t.clone(), xs),
        GridFunction::new(lattice, state0.t.clone(), ps),
    ))
}
