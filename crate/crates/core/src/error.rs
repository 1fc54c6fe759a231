use thiserror::Error;

/// Errors raised by lattice arithmetic, special functions and the umbral maps.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum UmbraError {
    /// A factor or gamma argument hit a pole. `index` identifies the
    /// offending factor or step when there is one.
    #[error("pole in {what}{}", index.map(|j| format!(" at index {j}")).unwrap_or_default())]
    Pole { what: &'static str, index: Option<i64> },

    #[error("argument lies on the branch cut of {what}")]
    BranchCut { what: &'static str },

    #[error("insufficient samples: need {needed}, have {available}")]
    InsufficientSamples { needed: usize, available: usize },

    #[error("series did not converge within {terms} terms")]
    NoConvergence { terms: usize },

    #[error("mode error: {0}")]
    Mode(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("quadrature budget exceeded (error estimate {estimate:.3e})")]
    QuadratureBudget { estimate: f64 },

    #[error("invalid lattice: {0}")]
    Lattice(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl UmbraError {
    /// Stable machine-readable tag, used in CLI error records.
    pub fn kind(&self) -> &'static str {
        match self {
            UmbraError::Pole { .. } => "pole",
            UmbraError::BranchCut { .. } => "branch_cut",
            UmbraError::InsufficientSamples { .. } => "insufficient_samples",
            UmbraError::NoConvergence { .. } => "no_convergence",
            UmbraError::Mode(_) => "mode",
            UmbraError::Domain(_) => "domain",
            UmbraError::Degenerate(_) => "degenerate",
            UmbraError::QuadratureBudget { .. } => "quadrature_budget",
            UmbraError::Lattice(_) => "lattice",
            UmbraError::Parse(_) => "parse",
            UmbraError::Precondition(_) => "precondition",
        }
    }

    pub(crate) fn pole(what: &'static str) -> Self {
        UmbraError::Pole { what, index: None }
    }

    pub(crate) fn pole_at(what: &'static str, index: i64) -> Self {
        UmbraError::Pole {
            what,
            index: Some(index),
        }
    }
}

pub type Result<T, E = UmbraError> = std::result::Result<T, E>;
