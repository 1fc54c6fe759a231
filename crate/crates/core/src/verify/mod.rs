//! Residual checks of the umbral solutions against their difference
//! equations, and continuum-limit checks.

mod continuum;
mod operator;
mod suites;

pub use continuum::{continuum_limit_check, dyadic_schedule, linspace, ContinuumRow, ContinuumTable};
pub use operator::{apply_operator, DifferenceOperatorSpec, OperatorTerm, ResidualReport};
pub use suites::{check, residual_suite, run_suite, suite_bound, Bound, Suite, SuiteConfig, SuiteOutcome, TolProfile};
