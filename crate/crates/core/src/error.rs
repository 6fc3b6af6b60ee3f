use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: denominator parameter {0} is a nonpositive integer reached before termination")]
    Pole(f64),
    #[error("series diverges: argument {0} lies outside the convergence region")]
    Divergence(f64),
    #[error("series did not converge within {0} terms")]
    NonConvergence(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("transformed arguments leave the convergence region: {0}")]
    TransformDomain(String),
    #[error("order bound violated: {0}")]
    OrderBound(String),
    #[error("shifted term {term} is invalid: {reason}")]
    ShiftedDomain { term: String, reason: String },
    #[error("tolerance not met: best value {value} with error estimate {err_est}")]
    ToleranceNotMet { value: f64, err_est: f64 },
    #[error("all strategies failed: {}", .0.iter().map(|(s, r)| format!("{s}: {r}")).collect::<Vec<_>>().join("; "))]
    AllStrategiesFailed(Vec<(String, String)>),
}

impl Error {
    /// Stable machine-readable code, used in CLI error records.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DOMAIN",
            Error::Pole(_) => "POLE",
            Error::Divergence(_) => "DIVERGENCE",
            Error::NonConvergence(_) => "NON-CONVERGENCE",
            Error::Precondition(_) => "PRECONDITION",
            Error::NotApplicable(_) => "NOT-APPLICABLE",
            Error::TransformDomain(_) => "TRANSFORM-DOMAIN",
            Error::OrderBound(_) => "ORDER-BOUND",
            Error::ShiftedDomain { .. } => "SHIFTED-DOMAIN",
            Error::ToleranceNotMet { .. } => "TOLERANCE-NOT-MET",
            Error::AllStrategiesFailed(_) => "ALL-STRATEGIES-FAILED",
        }
    }
}
