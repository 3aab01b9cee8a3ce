//! Support classes for the underlying measures.

use crate::{MomentError, Result, Scalar};

/// The three families of supports treated by the moment-space machinery.
#[derive(Debug, Clone, PartialEq)]
pub enum SupportClass<T> {
    /// Compact interval `[a, b]`, `a < b`.
    Bounded { a: T, b: T },
    /// The half line `[0, ∞)`.
    HalfLine,
    /// The whole real line.
    RealLine,
}

impl<T: Scalar> SupportClass<T> {
    pub fn bounded(a: T, b: T) -> Result<Self> {
        if a < b {
            Ok(SupportClass::Bounded { a, b })
        } else {
            Err(MomentError::InvalidInterval)
        }
    }

    /// The unit interval `[0, 1]`.
    pub fn unit() -> Self {
        SupportClass::Bounded {
            a: T::zero(),
            b: T::one(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, SupportClass::Bounded { .. })
    }

    /// Interval endpoints for a bounded support.
    pub fn interval(&self) -> Option<(T, T)> {
        match self {
            SupportClass::Bounded { a, b } => Some((a.clone(), b.clone())),
            _ => None,
        }
    }
}

impl SupportClass<f64> {
    /// Short text tag used in CLI output and error messages.
    pub fn tag(&self) -> &'static str {
        match self {
            SupportClass::Bounded { .. } => "bounded",
            SupportClass::HalfLine => "halfline",
            SupportClass::RealLine => "realline",
        }
    }
}
