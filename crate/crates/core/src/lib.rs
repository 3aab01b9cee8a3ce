//! Coordinate systems on moment spaces and the bijections between them.
//!
//! A probability measure on a support class `T ∈ {[a,b], [0,∞), ℝ}` is
//! represented here through the first `N` of its power moments, and the
//! interior of the moment space `M_N(T)` is reparameterized by one of three
//! native coordinate systems:
//!
//! * canonical moments `p_k ∈ (0,1)` on a bounded interval,
//! * recursion variables `z_k > 0` on the half line,
//! * three-term recurrence coefficients `(b_k, a_k)`, `a_k > 0`, on the
//!   real line (odd dimension `2n−1` only).
//!
//! All transforms are generic over a [`Scalar`] so the same code path runs
//! in `f64` and in exact rational arithmetic. The moment maps are
//! exponentially ill-conditioned in the dimension; floating-point round
//! trips are only certified for `N ≤ 12` away from the boundary, exact
//! arithmetic is the reference beyond that.

use num_traits::{FromPrimitive, Num, Signed};

pub mod affine;
pub mod canonical;
pub mod interior;
pub mod recurrence;
pub mod skibinsky;
pub mod support;
pub mod types;

pub use affine::affine_transform_moments;
pub use canonical::{canonical_to_moments, canonical_to_recurrence, moments_to_canonical};
pub use interior::{is_interior, is_interior_with_margin, Coordinate, InteriorFailure, Interiority};
pub use recurrence::{
    moments_to_recurrence, moments_to_recurrence_diagnosed, recurrence_to_moments,
    z_to_recurrence, HankelDiagnostics,
};
pub use skibinsky::{moments_to_z, skibinsky_array, skibinsky_forward, SkibinskyArray};
pub use support::SupportClass;
pub use types::{CanonicalMoments, MomentVector, RecurrenceCoefficients, ZVector};

/// Numeric field the transforms are generic over.
///
/// Implemented by `f64` and by `num_rational::BigRational`; the blanket impl
/// picks up anything with ring operations, ordering and integer embedding.
pub trait Scalar: Clone + PartialOrd + Num + Signed + FromPrimitive {}

impl<T: Clone + PartialOrd + Num + Signed + FromPrimitive> Scalar for T {}

/// Absolute margin used by the default interiority check on p/z/a coordinates.
pub const DEFAULT_INTERIOR_MARGIN: f64 = 1e-12;

/// Errors for moment-space transforms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MomentError {
    #[error("empty input vector")]
    EmptyInput,
    #[error("invalid interval: left endpoint must be strictly below right endpoint")]
    InvalidInterval,
    #[error("invalid coordinate at index {index}: {what}")]
    InvalidCoordinate { index: usize, what: &'static str },
    #[error("moment vector is not interior at index {index} ({coordinate})")]
    NonInteriorMoments { index: usize, coordinate: Coordinate },
    #[error("Hankel form is not positive definite at order {order}")]
    NotPositiveDefinite { order: usize },
    #[error("off-diagonal recurrence coefficient a_{index} is not positive")]
    NonPositiveOffDiagonal { index: usize },
    #[error("affine scale must be nonzero")]
    ZeroScale,
    #[error("real-line moment vectors must have odd dimension, got {len}")]
    EvenDimension { len: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("support class mismatch: operation requires {required}")]
    SupportMismatch { required: &'static str },
}

pub type Result<T> = std::result::Result<T, MomentError>;
