//! Product distributions on moment spaces.
//!
//! Three families, one per support class, all defined through independent
//! native coordinates:
//!
//! * bounded `[a,b]`: canonical moments `p_k ~ Beta(γ_k+n−k+1, δ_k+n−k+1)`
//!   (or a user-supplied weight family via rejection sampling),
//! * half line: `z_k ~ Gamma(γ_k+n−k+1, rate δ_k)`,
//! * real line (odd dimension `2n−1`): `b_k ~ N(0, 1/(2δ_{2k−1}))`,
//!   `a_k ~ Gamma(γ_k+2n−2k, rate δ_{2k})`.
//!
//! Gamma parameters follow the shape–RATE convention throughout (density
//! `∝ x^{shape−1} e^{−rate·x}`); `rand_distr::Gamma` wants shape–scale, so
//! the rate is inverted exactly once, here.

pub mod density;
pub mod limit;
pub mod params;
pub mod rng;
pub mod sample;

pub use density::{density_f, density_g, density_h, log_density_f, log_density_g, log_density_h};
pub use limit::{limit_density_check, LimitGap};
pub use params::{GeneralWeightFamily, MomentLawParams, WeightFn};
pub use rng::RngStream;
pub use sample::{
    sample_canonical_bounded, sample_canonical_bounded_general, sample_moments_bounded,
    sample_moments_halfline, sample_moments_realline, sample_projected_bounded,
    sample_projected_halfline, sample_projected_realline,
};

/// Errors raised by samplers and density evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DistributionError {
    #[error("invalid parameter: {0}")]
    InvalidParams(&'static str),
    #[error("rejection sampler exhausted its budget of {budget} draws at coordinate {index}")]
    RejectionBudgetExceeded { index: usize, budget: usize },
    #[error("point is not inside the bounded moment space for scale {scale}")]
    PointNotInBoundedSpace { scale: f64 },
    #[error(transparent)]
    Moment(#[from] momentforge_core::MomentError),
}

pub type Result<T> = std::result::Result<T, DistributionError>;
