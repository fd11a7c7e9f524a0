//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide error enumeration.
///
/// Numerical routines report *why* they failed (instability,
/// indefiniteness, divergence) rather than collapsing everything into a
/// generic message, so that the experiment driver can record per-trial
/// failures without aborting a sweep.
#[derive(Debug, Error)]
pub enum Error {
    /// Dimension mismatches, non-finite entries, invalid horizons and
    /// other malformed arguments.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A matrix expected to be symmetric positive definite is not.
    #[error("matrix is not symmetric positive definite: {0}")]
    NotPositiveDefinite(String),

    /// A closed-loop matrix with spectral radius >= 1 was passed to a
    /// routine that requires Schur stability.
    #[error("matrix is not Schur stable (spectral radius {rho})")]
    Unstable { rho: f64 },

    /// The Riccati recursion failed to converge within its iteration cap.
    #[error("pair (A, B) appears non-stabilizable: no Riccati convergence in {iterations} iterations")]
    NonStabilizable { iterations: usize },

    /// Vertex enumeration only supports small input dimensions.
    #[error("unsupported input dimension {dim} (vertex enumeration is limited to m <= {max})")]
    UnsupportedDimension { dim: usize, max: usize },

    /// The input constraint set has a recession direction.
    #[error("input constraint set is unbounded")]
    UnboundedSet,

    /// No stabilizable estimate was found within the resampling cap.
    #[error("no stabilizable estimated system found in {attempts} attempts")]
    SamplingFailure { attempts: usize },

    /// The active-set solver tripped its cycling guard.
    #[error("QP solver failure: {0}")]
    SolverFailure(String),

    /// A closed-loop state left the divergence guard radius.
    #[error("closed-loop divergence at step {step} (state norm {norm:.3e})")]
    Divergence { step: usize, norm: f64 },

    /// The receding-horizon value failed to converge while doubling the
    /// horizon, so membership of x0 in the region of attraction is unknown.
    #[error("infinite-horizon cost did not converge up to horizon {max_horizon}; x0 may lie outside the region of attraction")]
    RoaMembershipUnknown { max_horizon: usize },

    /// Budget scalars for the value-gap constants must be positive.
    #[error("invalid budget: {0}")]
    InvalidBudget(String),

    /// Extension-mode decrease certificates need a terminal feedback gain.
    #[error("extension mode requires a terminal feedback gain")]
    MissingGain,

    /// Configuration file errors carry the offending field path.
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
