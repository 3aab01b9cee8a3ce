//! Moment transform under affine maps of the underlying measure.

use crate::support::SupportClass;
use crate::types::MomentVector;
use crate::{MomentError, Result, Scalar};

/// Moments of the pushforward under `x ↦ α·x + β`.
///
/// `m'_k = Σ_{j=0}^{k} C(k,j) β^{k−j} α^j m_j` with `m_0 = 1`. The support
/// follows the map where that is expressible: bounded intervals map to
/// bounded intervals, the half line survives pure positive scaling, and
/// anything else lands on the real line.
pub fn affine_transform_moments<T: Scalar>(
    m: &MomentVector<T>,
    alpha: &T,
    shift: &T,
) -> Result<MomentVector<T>> {
    if alpha.is_zero() {
        return Err(MomentError::ZeroScale);
    }
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    // Rolling binomial row so the generic code avoids an integer dependency.
    let mut binom: Vec<T> = vec![T::one()];
    for k in 1..=n {
        let mut next = Vec::with_capacity(k + 1);
        next.push(T::one());
        for j in 1..k {
            next.push(binom[j - 1].clone() + binom[j].clone());
        }
        next.push(T::one());
        binom = next;

        let mut acc = T::zero();
        let mut alpha_pow = T::one();
        for j in 0..=k {
            let mj = if j == 0 {
                T::one()
            } else {
                m.values()[j - 1].clone()
            };
            let mut shift_pow = T::one();
            for _ in 0..(k - j) {
                shift_pow = shift_pow * shift.clone();
            }
            acc = acc + binom[j].clone() * shift_pow * alpha_pow.clone() * mj;
            alpha_pow = alpha_pow * alpha.clone();
        }
        out.push(acc);
    }

    let support = match m.support() {
        SupportClass::Bounded { a, b } => {
            let ia = alpha.clone() * a.clone() + shift.clone();
            let ib = alpha.clone() * b.clone() + shift.clone();
            if ia < ib {
                SupportClass::Bounded { a: ia, b: ib }
            } else {
                SupportClass::Bounded { a: ib, b: ia }
            }
        }
        SupportClass::HalfLine => {
            if *alpha > T::zero() && shift.is_zero() {
                SupportClass::HalfLine
            } else {
                SupportClass::RealLine
            }
        }
        SupportClass::RealLine => SupportClass::RealLine,
    };
    MomentVector::new(support, out)
}
