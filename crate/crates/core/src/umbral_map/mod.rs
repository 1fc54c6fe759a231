//! Umbral transforms: power series term by term, the Fourier functional,
//! and hypergeometric specs mapped to hypergeometric specs.

mod fourier;
mod hyper_map;
mod series;

pub use fourier::{
    fourier_umbral_transform, rational_geom_transform, sampling_function, Spectrum, NUMERICAL_SPECTRUM_TOL,
};
pub use hyper_map::{hyper_map_basic, hyper_map_exponential, hyper_map_power_argument, umbral_hyper_map, LemmaInput};
pub use series::{umbral_series_transform, UmbralSeries};
