//! Value types for the four coordinate systems.

use crate::support::SupportClass;
use crate::{MomentError, Result, Scalar};

/// Ordinary power moments `m_1..m_N` of a probability measure on `support`.
///
/// Construction does not check interiority; boundary vectors are legal
/// inputs for forward maps and are rejected by the inverse maps. Use
/// [`crate::is_interior`] for an explicit membership test.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentVector<T> {
    support: SupportClass<T>,
    m: Vec<T>,
}

impl<T: Scalar> MomentVector<T> {
    pub fn new(support: SupportClass<T>, m: Vec<T>) -> Result<Self> {
        if m.is_empty() {
            return Err(MomentError::EmptyInput);
        }
        Ok(MomentVector { support, m })
    }

    pub fn support(&self) -> &SupportClass<T> {
        &self.support
    }

    pub fn values(&self) -> &[T] {
        &self.m
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    /// `m_k`, 1-based.
    pub fn moment(&self, k: usize) -> &T {
        &self.m[k - 1]
    }

    pub fn into_values(self) -> Vec<T> {
        self.m
    }
}

/// Canonical moments `p_1..p_N` of a measure on the interval `[a, b]`.
///
/// `new` accepts the closed cube `[0,1]^N` so that boundary points remain
/// usable by forward maps; inverse maps only ever produce interior vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalMoments<T> {
    interval: (T, T),
    p: Vec<T>,
}

impl<T: Scalar> CanonicalMoments<T> {
    pub fn new(interval: (T, T), p: Vec<T>) -> Result<Self> {
        if interval.0 >= interval.1 {
            return Err(MomentError::InvalidInterval);
        }
        if p.is_empty() {
            return Err(MomentError::EmptyInput);
        }
        for (i, v) in p.iter().enumerate() {
            if *v < T::zero() || *v > T::one() {
                return Err(MomentError::InvalidCoordinate {
                    index: i + 1,
                    what: "canonical moment outside [0, 1]",
                });
            }
        }
        Ok(CanonicalMoments { interval, p })
    }

    /// Canonical moments on the unit interval.
    pub fn unit(p: Vec<T>) -> Result<Self> {
        Self::new((T::zero(), T::one()), p)
    }

    pub fn interval(&self) -> (T, T) {
        self.interval.clone()
    }

    pub fn values(&self) -> &[T] {
        &self.p
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    /// `ζ_k = (1 − p_{k−1}) p_k` with `p_0 = 0`; the recursion variables of
    /// the measure pushed to `[0, 1]`.
    pub fn zeta(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.p.len());
        let mut prev = T::zero();
        for pk in &self.p {
            out.push((T::one() - prev.clone()) * pk.clone());
            prev = pk.clone();
        }
        out
    }
}

/// Recursion variables `z_1..z_N` of a measure on the half line.
///
/// `new` accepts zeros (boundary); inverse maps only produce positive ones.
#[derive(Debug, Clone, PartialEq)]
pub struct ZVector<T> {
    z: Vec<T>,
}

impl<T: Scalar> ZVector<T> {
    pub fn new(z: Vec<T>) -> Result<Self> {
        if z.is_empty() {
            return Err(MomentError::EmptyInput);
        }
        for (i, v) in z.iter().enumerate() {
            if *v < T::zero() {
                return Err(MomentError::InvalidCoordinate {
                    index: i + 1,
                    what: "negative z parameter",
                });
            }
        }
        Ok(ZVector { z })
    }

    pub fn values(&self) -> &[T] {
        &self.z
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.z.iter().all(|v| *v > T::zero())
    }

    pub fn into_values(self) -> Vec<T> {
        self.z
    }
}

/// Coefficients of the monic three-term recursion
/// `x P_k = P_{k+1} + b_{k+1} P_k + a_k P_{k−1}`.
///
/// Canonically `a` holds one entry fewer than `b` (a `2n−1`-dimensional
/// coordinate vector `(b_1, a_1, …, a_{n−1}, b_n)`); an even-length source
/// such as [`crate::z_to_recurrence`] on `2n` inputs yields a trailing
/// `a_n`, giving `a.len() == b.len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCoefficients<T> {
    b: Vec<T>,
    a: Vec<T>,
}

impl<T: Scalar> RecurrenceCoefficients<T> {
    pub fn new(b: Vec<T>, a: Vec<T>) -> Result<Self> {
        if b.is_empty() {
            return Err(MomentError::EmptyInput);
        }
        if a.len() + 1 != b.len() && a.len() != b.len() {
            return Err(MomentError::DimensionMismatch {
                expected: b.len() - 1,
                got: a.len(),
            });
        }
        for (i, v) in a.iter().enumerate() {
            if *v < T::zero() {
                return Err(MomentError::InvalidCoordinate {
                    index: i + 1,
                    what: "negative off-diagonal coefficient",
                });
            }
        }
        Ok(RecurrenceCoefficients { b, a })
    }

    pub fn diagonal(&self) -> &[T] {
        &self.b
    }

    pub fn off_diagonal(&self) -> &[T] {
        &self.a
    }

    /// Number of coordinates in ξ-order, `b.len() + a.len()`.
    pub fn coordinate_count(&self) -> usize {
        self.b.len() + self.a.len()
    }

    /// Coordinates interleaved as `(b_1, a_1, b_2, a_2, …)`, the order of
    /// the bijection with real-line moment vectors.
    pub fn interleaved(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.coordinate_count());
        for k in 0..self.b.len() {
            out.push(self.b[k].clone());
            if k < self.a.len() {
                out.push(self.a[k].clone());
            }
        }
        out
    }

    /// Inverse of [`interleaved`](Self::interleaved): odd length `2n−1`
    /// gives `n` diagonal and `n−1` off-diagonal coefficients.
    pub fn from_interleaved(x: &[T]) -> Result<Self> {
        if x.is_empty() {
            return Err(MomentError::EmptyInput);
        }
        let mut b = Vec::new();
        let mut a = Vec::new();
        for (i, v) in x.iter().enumerate() {
            if i % 2 == 0 {
                b.push(v.clone());
            } else {
                a.push(v.clone());
            }
        }
        Self::new(b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rejects_out_of_range() {
        assert!(CanonicalMoments::unit(vec![0.5, 1.5]).is_err());
        assert!(CanonicalMoments::unit(vec![0.0, 1.0]).is_ok());
        assert!(CanonicalMoments::new((1.0, 0.0), vec![0.5]).is_err());
    }

    #[test]
    fn zeta_decomposition() {
        let p = CanonicalMoments::unit(vec![0.5, 0.5, 0.5]).unwrap();
        assert_eq!(p.zeta(), vec![0.5, 0.25, 0.25]);
    }

    #[test]
    fn interleaving_round_trips() {
        let c = RecurrenceCoefficients::new(vec![1.0, 2.0, 3.0], vec![0.5, 0.25]).unwrap();
        let x = c.interleaved();
        assert_eq!(x, vec![1.0, 0.5, 2.0, 0.25, 3.0]);
        assert_eq!(RecurrenceCoefficients::from_interleaved(&x).unwrap(), c);
    }

    #[test]
    fn recurrence_allows_trailing_off_diagonal() {
        assert!(RecurrenceCoefficients::new(vec![1.0, 2.0], vec![0.5, 0.5]).is_ok());
        assert!(RecurrenceCoefficients::new(vec![1.0, 2.0], vec![0.5, 0.5, 0.5]).is_err());
    }
}
