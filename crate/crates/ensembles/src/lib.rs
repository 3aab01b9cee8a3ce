//! Random spectral measures of the classical β-ensembles.
//!
//! For every β > 0 the spectral measure (eigenvalues weighted by squared
//! first eigenvector components) of the Jacobi, Laguerre and Hermite
//! ensembles can be sampled constructively through a symmetric tridiagonal
//! matrix with independent entries; the weights come out Dirichlet(β/2,…)
//! and the moment vector follows the corresponding moment-space density.
//! Dense matrix models at β ∈ {1, 2} serve as independent oracles.

pub mod dense;
pub mod eigen;
pub mod measure;
pub mod spec;
pub mod tridiagonal;

pub use dense::dense_oracle;
pub use eigen::spectral_measure;
pub use measure::{spectral_moments, SpectralMeasure};
pub use spec::{EnsembleKind, EnsembleSpec, HermiteShape, Scaling};
pub use tridiagonal::{
    hermite_tridiagonal, jacobi_tridiagonal, laguerre_tridiagonal, sample_tridiagonal,
    spectral_moment_prefix, TridiagonalMatrix,
};

/// Errors from ensemble construction and eigen decomposition.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EnsembleError {
    #[error("invalid ensemble parameter: {0}")]
    InvalidSpec(&'static str),
    #[error("Gamma shape for off-diagonal {index} is not positive ({shape})")]
    NonPositiveShape { index: usize, shape: f64 },
    #[error("dense oracle supports beta in {{1, 2}} only, got {beta}")]
    UnsupportedBeta { beta: f64 },
    #[error("eigensolver failed to converge within {max_iter} iterations at eigenvalue {index}")]
    ConvergenceFailure { index: usize, max_iter: usize },
    #[error("spectral measure invariant violated: {0}")]
    InvalidMeasure(&'static str),
    #[error(transparent)]
    Distribution(#[from] momentforge_distributions::DistributionError),
    #[error(transparent)]
    Moment(#[from] momentforge_core::MomentError),
}

pub type Result<T> = std::result::Result<T, EnsembleError>;
