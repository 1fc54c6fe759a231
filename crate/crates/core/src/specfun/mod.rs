//! Special functions: log-gamma, generalized hypergeometric series, Gauss
//! ₂F₁ with its connection formula, Tricomi U, the Lerch transcendent at
//! nonpositive integer order, the upper incomplete gamma, and Airy Ai.

mod airy;
pub mod gamma;
mod gauss;
mod hyper;
mod incgamma;
mod lerch;
mod tricomi;

pub(crate) use airy::airy_constants;
pub use airy::{airy_ai_ref, airy_ai_series};
pub use gamma::{cos_pi, gamma, ln_gamma, ln_gamma_real, rgamma, rgamma_complex, sin_pi};
pub use gauss::{
    gauss_2f1_connection, gauss_2f1_ext, gauss_2f1_pfaff, gauss_2f1_series, CONNECTION_THRESHOLD, SERIES_RADIUS,
};
pub use hyper::{
    pfq_classify, pfq_eval, ConvergenceClass, EvalMode, GammaPower, HyperSpec, PowerFactor, Prefactor, MAX_SERIES_TERMS,
};
pub use incgamma::incomplete_gamma_upper;
pub use lerch::lerch_nonpos;
pub use tricomi::{tricomi_u, tricomi_u_combination, INTEGER_BETA_SHIFT};

pub use gamma::ln_gamma as log_gamma;
