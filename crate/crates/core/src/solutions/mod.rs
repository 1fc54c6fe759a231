//! Closed-form umbral solutions: the oscillator, one-term recursions
//! (Whittaker at spacing 2, inverse square), umbral whittakerM, Airy and
//! Gaussian functions, plane waves, and the Toda one-soliton.

mod airy;
mod gaussian;
mod oscillator;
mod recursion;
mod toda;
mod wave;
mod whittaker_m;

pub use airy::{um_airy, um_airy_quadrature, um_airy_series_parts, AiryMethod};
pub use gaussian::{um_gaussian, um_gaussian_series, um_gaussian_u, GaussianMethod};
pub use oscillator::{
    oscillator_energy, oscillator_evolve, oscillator_evolve_polar, oscillator_frequency, oscillator_grid,
    OscillatorState,
};
pub use recursion::{
    first_order_iterate, inverse_square_closed, inverse_square_ratio, whittaker_a2_closed, whittaker_a2_parts,
    whittaker_a2_pole, whittaker_a2_ratio, whittaker_half_closed, whittaker_half_constants, whittaker_half_parts,
    whittaker_half_ratio, WhittakerParams,
};
pub use toda::{
    toda_continuum, toda_series_truncated, toda_umbral, toda_umbral_continued, toda_umbral_momentum, TodaParams,
};
pub use wave::{phase_velocity, plane_wave, refraction_index, PhaseConvention, WaveParams};
pub use whittaker_m::um_whittaker_m;
