//! Monte-Carlo verification of the moment-space central limit theorems.
//!
//! The harness draws standardized moment fluctuations
//! `scale · M⁻¹ (m − limit)` — with `(limit, scale, M)` chosen per source:
//! arcsine/√(8n)/A on a bounded interval, Marchenko–Pastur/√n/C on the half
//! line, semicircle/√(2n)/D on the real line, and the `√(4βn)` / `√(βn/2)`
//! variants for the rescaled ensembles — and tests the result against
//! N(0, I) coordinate-wise (Kolmogorov–Smirnov) and through the empirical
//! covariance.

pub mod clt;
pub mod jacobian;
pub mod standardize;
pub mod stats;

pub use clt::{run_clt, CltExperimentSpec, CltReport, CltSource, CoordinateVerdict};
pub use jacobian::jacobian_fd;
pub use standardize::standardize;
pub use stats::{empirical_cov, ks_normal, two_sample_ks, KsResult};

/// Errors from the statistics utilities and the harness.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StatError {
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("matrix is singular at row {row}")]
    SingularMatrix { row: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
    #[error("invalid experiment: {0}")]
    InvalidExperiment(&'static str),
    #[error("map evaluation failed at probe {index}: {message}")]
    EvaluationFailure { index: usize, message: String },
    #[error(transparent)]
    Distribution(#[from] momentforge_distributions::DistributionError),
    #[error(transparent)]
    Ensemble(#[from] momentforge_ensembles::EnsembleError),
}

pub type Result<T> = std::result::Result<T, StatError>;
