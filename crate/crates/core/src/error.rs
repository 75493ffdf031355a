use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A log-domain result cannot be exponentiated into an `f64`.
    #[error("exponent {exponent} is outside the representable range")]
    Overflow { exponent: f64 },

    /// A series diverges for the given argument and parameters.
    #[error("series diverges: {0}")]
    Divergent(String),

    /// Summation stopped at the term cap before meeting the tolerance.
    #[error("no convergence after {terms} terms (relative tail estimate {tail_bound:e})")]
    Convergence { terms: usize, tail_bound: f64 },

    /// An expansion coefficient is singular at these parameters.
    #[error("singular coefficient: {0}")]
    Singular(String),

    /// Inputs are too close to a singularity for a reliable evaluation.
    #[error("ill-conditioned: {0}")]
    Conditioning(String),

    /// The requested method does not apply in this asymptotic regime.
    #[error("regime mismatch: {0}")]
    Regime(String),
}

pub type Result<T> = std::result::Result<T, Error>;
