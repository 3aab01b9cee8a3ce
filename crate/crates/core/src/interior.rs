//! Interior membership tests for moment vectors.

use crate::canonical::moments_to_canonical;
use crate::recurrence::moments_to_recurrence;
use crate::skibinsky::moments_to_z_raw;
use crate::support::SupportClass;
use crate::types::MomentVector;
use crate::{MomentError, Scalar, DEFAULT_INTERIOR_MARGIN};

/// Which native coordinate detected a boundary violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinate {
    CanonicalP,
    ZParameter,
    OffDiagonalA,
}

impl std::fmt::Display for Coordinate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Coordinate::CanonicalP => "canonical moment p",
            Coordinate::ZParameter => "z parameter",
            Coordinate::OffDiagonalA => "off-diagonal coefficient a",
        })
    }
}

/// Why a vector failed the interiority test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InteriorFailure {
    /// A native coordinate sits on or past the boundary (within the margin).
    Boundary { index: usize, coordinate: Coordinate },
    /// Real-line vectors must have odd dimension.
    EvenRealDimension { len: usize },
}

/// Result of [`is_interior`]: the verdict plus the first failing coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interiority {
    pub is_interior: bool,
    pub failure: Option<InteriorFailure>,
}

impl Interiority {
    fn ok() -> Self {
        Interiority { is_interior: true, failure: None }
    }

    fn fail(failure: InteriorFailure) -> Self {
        Interiority { is_interior: false, failure: Some(failure) }
    }
}

/// Interiority with the default absolute margin of `1e−12`.
pub fn is_interior(m: &MomentVector<f64>) -> Interiority {
    is_interior_with_margin(m, &DEFAULT_INTERIOR_MARGIN)
}

/// Interiority test: the vector is interior iff the transform to the native
/// coordinate of its support class succeeds with every coordinate strictly
/// further than `margin` from the boundary (`p_k ∈ (margin, 1−margin)`,
/// `z_k > margin`, `a_k > margin`).
pub fn is_interior_with_margin<T: Scalar>(m: &MomentVector<T>, margin: &T) -> Interiority {
    match m.support() {
        SupportClass::Bounded { .. } => match moments_to_canonical(m) {
            Ok(p) => {
                for (i, v) in p.values().iter().enumerate() {
                    if *v <= *margin || *v >= T::one() - margin.clone() {
                        return Interiority::fail(InteriorFailure::Boundary {
                            index: i + 1,
                            coordinate: Coordinate::CanonicalP,
                        });
                    }
                }
                Interiority::ok()
            }
            Err(e) => from_error(e),
        },
        SupportClass::HalfLine => match moments_to_z_raw(m.values()) {
            Ok(z) => {
                for (i, v) in z.iter().enumerate() {
                    if *v <= *margin {
                        return Interiority::fail(InteriorFailure::Boundary {
                            index: i + 1,
                            coordinate: Coordinate::ZParameter,
                        });
                    }
                }
                Interiority::ok()
            }
            Err(e) => from_error(e),
        },
        SupportClass::RealLine => {
            if m.len() % 2 == 0 {
                return Interiority::fail(InteriorFailure::EvenRealDimension { len: m.len() });
            }
            match moments_to_recurrence(m) {
                Ok(c) => {
                    for (i, v) in c.off_diagonal().iter().enumerate() {
                        if *v <= *margin {
                            return Interiority::fail(InteriorFailure::Boundary {
                                index: i + 1,
                                coordinate: Coordinate::OffDiagonalA,
                            });
                        }
                    }
                    Interiority::ok()
                }
                Err(e) => from_error(e),
            }
        }
    }
}

fn from_error(e: MomentError) -> Interiority {
    match e {
        MomentError::NonInteriorMoments { index, coordinate } => {
            Interiority::fail(InteriorFailure::Boundary { index, coordinate })
        }
        // ν_k ≤ 0 at order k means the a_{k−1} pivot failed.
        MomentError::NotPositiveDefinite { order } => {
            Interiority::fail(InteriorFailure::Boundary {
                index: order - 1,
                coordinate: Coordinate::OffDiagonalA,
            })
        }
        MomentError::EvenDimension { len } => {
            Interiority::fail(InteriorFailure::EvenRealDimension { len })
        }
        // Remaining errors concern malformed input, not boundary geometry;
        // report them as a failure at the first coordinate.
        _ => Interiority::fail(InteriorFailure::Boundary {
            index: 1,
            coordinate: Coordinate::CanonicalP,
        }),
    }
}
