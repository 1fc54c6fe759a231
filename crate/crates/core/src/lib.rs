//! Umbral calculus on a uniform lattice.
//!
//! Continuum functions are mapped to their lattice ("umbral") images: powers
//! become falling factorials, `e^{λt}` becomes `(1+λa)^{t/a}`, derivatives
//! become forward differences. Hypergeometric functions map to
//! hypergeometric functions with extra parameters, which is how the umbral
//! Airy, Gaussian and Whittaker functions are evaluated here.
//!
//! Modules, bottom up:
//! - [`umbral_core`]: exact/float numbers, lattices, basic polynomials, Δ.
//! - [`specfun`]: gamma, pFq, ₂F₁, U, Lerch, incomplete gamma, Airy.
//! - [`quad`]: adaptive quadrature.
//! - [`umbral_map`]: series, Fourier and hypergeometric umbral transforms.
//! - [`solutions`]: closed-form lattice solutions.
//! - [`verify`]: difference-operator residuals and continuum limits.
//! - [`cli`]: configuration and runners behind the `umbra` binary.

pub mod cli;
pub mod error;
pub mod quad;
pub mod solutions;
pub mod specfun;
pub mod umbral_core;
pub mod umbral_map;
pub mod verify;

pub use error::{Result, UmbraError};
pub use num::complex::Complex64;
pub use umbral_core::{GridFunction, Lattice, Number};
