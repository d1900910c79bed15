use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An input fell outside its mathematical domain.
    #[error("domain error: {name} = {value} must lie in {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: String,
    },

    /// Conditioned-walk sampling exhausted its retry budget.
    #[error("excursion sampling failed after {retries} bridge attempts")]
    SamplingFailure { retries: u64 },

    /// Rejection sampling exhausted its budget.
    #[error("rejection sampling did not accept within {budget} proposals")]
    RejectionBudget { budget: u64 },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature did not converge: error estimate {estimate} > tolerance {tolerance}")]
    QuadratureNonConvergence { estimate: f64, tolerance: f64 },

    /// A simulation exceeded a hard size budget.
    #[error("budget exceeded: {what} reached the cap of {cap}")]
    BudgetExceeded { what: &'static str, cap: u64 },

    /// A structural invariant of an input object is violated.
    #[error("invalid structure: {0}")]
    Structure(String),

    /// Not enough statistics to produce the requested estimate.
    #[error("insufficient statistics: {0}")]
    LowStatistics(String),
}

impl Error {
    pub fn domain(name: &'static str, value: f64, expected: impl Into<String>) -> Self {
        Error::Domain {
            name,
            value,
            expected: expected.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
