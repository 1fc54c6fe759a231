//! Lattice arithmetic: numeric values, lattices, grid functions, basic
//! polynomials, the umbral exponential and trigonometric functions, and the
//! forward difference.

mod lattice;
mod number;
mod powers;

pub use lattice::{forward_difference, GridFunction, Lattice};
pub use number::Number;
pub use powers::{falling_factorial, rising_factorial_inverse, umbral_exp, umbral_power_gamma, umbral_trig};
