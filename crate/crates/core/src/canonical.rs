//! Canonical moments on a bounded interval.
//!
//! The bridge to the half-line machinery is the decomposition
//! `z_k(ν) = (1 − p_{k−1}) p_k` of the recursion variables of the measure ν
//! pushed to `[0, 1]`: running the Skibinsky recursion on ζ(p) produces the
//! `[0,1]`-moments, and an affine transform moves them to `[a, b]`.
//! Canonical moments themselves are affine invariants, so the inverse goes
//! the other way around.

use crate::affine::affine_transform_moments;
use crate::interior::Coordinate;
use crate::skibinsky::{moments_to_z_raw, SkibinskyArray};
use crate::support::SupportClass;
use crate::types::{CanonicalMoments, MomentVector, RecurrenceCoefficients};
use crate::{MomentError, Result, Scalar};

/// Forward map `p ↦ m` on `[a, b]`; accepts boundary values `p_k ∈ {0, 1}`.
pub fn canonical_to_moments<T: Scalar>(p: &CanonicalMoments<T>) -> Result<MomentVector<T>> {
    let zeta = p.zeta();
    let unit_moments = SkibinskyArray::from_z(&zeta)?.moments();
    let unit = MomentVector::new(SupportClass::unit(), unit_moments)?;
    let (a, b) = p.interval();
    let alpha = b - a.clone();
    affine_transform_moments(&unit, &alpha, &a)
}

/// Inverse map `m ↦ p` for interior points of `M_N([a, b])`.
pub fn moments_to_canonical<T: Scalar>(m: &MomentVector<T>) -> Result<CanonicalMoments<T>> {
    let (a, b) = match m.support() {
        SupportClass::Bounded { a, b } => (a.clone(), b.clone()),
        _ => {
            return Err(MomentError::SupportMismatch { required: "bounded" });
        }
    };
    // y = (x − a)/(b − a)
    let width = b.clone() - a.clone();
    let alpha = T::one() / width.clone();
    let shift = -(a.clone() / width);
    let unit = affine_transform_moments(m, &alpha, &shift)?;
    let z = moments_to_z_raw(unit.values())?;
    let p = unroll_zeta(&z)?;
    Ok(CanonicalMoments::new((a, b), p).expect("interior by construction"))
}

/// Solves `z_k = (1 − p_{k−1}) p_k` forward, rejecting non-interior output.
pub(crate) fn unroll_zeta<T: Scalar>(z: &[T]) -> Result<Vec<T>> {
    let mut p: Vec<T> = Vec::with_capacity(z.len());
    let mut prev = T::zero();
    for (i, zk) in z.iter().enumerate() {
        let denom = T::one() - prev;
        let pk = zk.clone() / denom;
        if pk <= T::zero() || pk >= T::one() {
            return Err(MomentError::NonInteriorMoments {
                index: i + 1,
                coordinate: Coordinate::CanonicalP,
            });
        }
        prev = pk.clone();
        p.push(pk);
    }
    Ok(p)
}

/// Chain relations mapping canonical moments of odd dimension `2n−1` to the
/// recurrence coefficients of the monic orthogonal polynomials on `[a, b]`:
///
/// ```text
/// b_{k+1} = a + (b−a)·((1−p_{2k−1}) p_{2k} + (1−p_{2k}) p_{2k+1})
/// a_k     = (b−a)²·(1−p_{2k−2}) p_{2k−1} (1−p_{2k−1}) p_{2k}
/// ```
///
/// with `p_{−1} = p_0 = 0`.
pub fn canonical_to_recurrence<T: Scalar>(
    p: &CanonicalMoments<T>,
) -> Result<RecurrenceCoefficients<T>> {
    let v = p.values();
    if v.len() % 2 == 0 {
        return Err(MomentError::EvenDimension { len: v.len() });
    }
    let n = (v.len() + 1) / 2;
    let (a, b) = p.interval();
    let width = b - a.clone();
    // 1-based access with the p_0 = 0 convention.
    let at = |l: usize| -> T {
        if l == 0 {
            T::zero()
        } else {
            v[l - 1].clone()
        }
    };

    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        let term = (T::one() - at(2 * k).clone()) * at(2 * k + 1);
        let term = if k == 0 {
            term
        } else {
            (T::one() - at(2 * k - 1)) * at(2 * k) + term
        };
        diag.push(a.clone() + width.clone() * term);
    }
    let mut off = Vec::with_capacity(n - 1);
    for k in 1..n {
        let prod = (T::one() - at(2 * k - 2))
            * at(2 * k - 1)
            * (T::one() - at(2 * k - 1))
            * at(2 * k);
        off.push(width.clone() * width.clone() * prod);
    }
    RecurrenceCoefficients::new(diag, off)
}
