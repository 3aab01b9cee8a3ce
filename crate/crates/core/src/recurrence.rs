//! Recurrence coefficients and real-line moment vectors.

use crate::support::SupportClass;
use crate::types::{MomentVector, RecurrenceCoefficients, ZVector};
use crate::{MomentError, Result, Scalar};

/// Half-line decomposition of the recurrence coefficients:
/// `a_k = z_{2k−1} z_{2k}`, `b_k = z_{2k−2} + z_{2k−1}` with `z_0 = 0`.
///
/// An input of odd length `2n−1` yields `n` diagonal and `n−1` off-diagonal
/// coefficients; an even length `2n` additionally yields the trailing `a_n`.
pub fn z_to_recurrence<T: Scalar>(z: &ZVector<T>) -> Result<RecurrenceCoefficients<T>> {
    let v = z.values();
    let zat = |l: usize| -> T {
        if l == 0 || l > v.len() {
            T::zero()
        } else {
            v[l - 1].clone()
        }
    };
    let n_diag = v.len().div_ceil(2);
    let n_off = v.len() / 2;
    let mut b = Vec::with_capacity(n_diag);
    for k in 1..=n_diag {
        b.push(zat(2 * k - 2) + zat(2 * k - 1));
    }
    let mut a = Vec::with_capacity(n_off);
    for k in 1..=n_off {
        a.push(zat(2 * k - 1) * zat(2 * k));
    }
    RecurrenceCoefficients::new(b, a)
}

/// Moments `m_1..m_{2n−1}` of any measure with recurrence coefficients
/// `b_1..b_n`, `a_1..a_{n−1}`.
///
/// Computed as `m_j = e_1ᵀ Tʲ e_1` where `T` is the (monic, nonsymmetric)
/// Jacobi matrix with unit subdiagonal, diagonal `b` and superdiagonal `a`.
/// Truncation at size `n` is exact for `j ≤ 2n−1` because length-`j` return
/// paths never reach past row `⌊j/2⌋`. A trailing `a_n` entry, when present,
/// is ignored.
pub fn recurrence_to_moments<T: Scalar>(
    c: &RecurrenceCoefficients<T>,
) -> Result<MomentVector<T>> {
    let b = c.diagonal();
    let a = &c.off_diagonal()[..c.diagonal().len().saturating_sub(1).min(c.off_diagonal().len())];
    for (i, v) in a.iter().enumerate() {
        if *v <= T::zero() {
            return Err(MomentError::NonPositiveOffDiagonal { index: i + 1 });
        }
    }
    let n = b.len();
    let len = 2 * n - 1;
    let mut v = vec![T::zero(); n];
    v[0] = T::one();
    let mut m = Vec::with_capacity(len);
    for _ in 0..len {
        let mut w = vec![T::zero(); n];
        for i in 0..n {
            let mut acc = b[i].clone() * v[i].clone();
            if i > 0 {
                acc = acc + v[i - 1].clone();
            }
            if i + 1 < n && i < a.len() {
                acc = acc + a[i].clone() * v[i + 1].clone();
            }
            w[i] = acc;
        }
        m.push(w[0].clone());
        v = w;
    }
    MomentVector::new(SupportClass::RealLine, m)
}

/// Pivot diagnostics from the Hankel factorization run by
/// [`moments_to_recurrence_diagnosed`].
#[derive(Debug, Clone, PartialEq)]
pub struct HankelDiagnostics {
    /// Squared norms `ν_k = ⟨P_k, P_k⟩` of the monic orthogonal polynomials;
    /// these are the pivots of the LDLᵀ factorization of the Hankel matrix.
    pub pivots: Vec<f64>,
    /// `max ν / min ν`, a cheap proxy for the conditioning of the map.
    pub pivot_ratio: f64,
    /// Set when `pivot_ratio` exceeds the caller's threshold.
    pub conditioning_warning: bool,
}

/// Inverse of [`recurrence_to_moments`] for interior real-line vectors of
/// odd dimension `2n−1`.
///
/// Runs moment-space Gram–Schmidt (the Stieltjes recursion): with inner
/// products `⟨x^i, x^j⟩ = m_{i+j}` taken from the input,
///
/// ```text
/// ν_k = ⟨P_k, P_k⟩,  a_k = ν_k/ν_{k−1},  b_{k+1} = ⟨x P_k, P_k⟩/ν_k,
/// P_{k+1} = (x − b_{k+1}) P_k − a_k P_{k−1}.
/// ```
///
/// The pivots `ν_k` are exactly the diagonal of the LDLᵀ factorization of
/// the Hankel matrix, so positivity of every `ν_k` is the interiority test;
/// no raw determinants are formed.
pub fn moments_to_recurrence<T: Scalar>(
    m: &MomentVector<T>,
) -> Result<RecurrenceCoefficients<T>> {
    stieltjes(m).map(|(c, _)| c)
}

/// `f64` entry point that also reports factorization pivots and flags
/// ill-conditioning when the pivot ratio exceeds `ratio_threshold`.
pub fn moments_to_recurrence_diagnosed(
    m: &MomentVector<f64>,
    ratio_threshold: f64,
) -> Result<(RecurrenceCoefficients<f64>, HankelDiagnostics)> {
    let (c, pivots) = stieltjes(m)?;
    let max = pivots.iter().cloned().fold(f64::MIN, f64::max);
    let min = pivots.iter().cloned().fold(f64::MAX, f64::min);
    let pivot_ratio = max / min;
    Ok((
        c,
        HankelDiagnostics {
            pivots,
            pivot_ratio,
            conditioning_warning: pivot_ratio > ratio_threshold,
        },
    ))
}

fn stieltjes<T: Scalar>(m: &MomentVector<T>) -> Result<(RecurrenceCoefficients<T>, Vec<T>)> {
    if !matches!(m.support(), SupportClass::RealLine) {
        return Err(MomentError::SupportMismatch { required: "realline" });
    }
    let len = m.len();
    if len % 2 == 0 {
        return Err(MomentError::EvenDimension { len });
    }
    let n = (len + 1) / 2;
    let mom = |i: usize| -> T {
        if i == 0 {
            T::one()
        } else {
            m.values()[i - 1].clone()
        }
    };
    // ⟨f, g⟩ = Σ f_i g_j m_{i+j} over coefficient vectors.
    let ip = |f: &[T], g: &[T]| -> T {
        let mut acc = T::zero();
        for (i, fi) in f.iter().enumerate() {
            for (j, gj) in g.iter().enumerate() {
                acc = acc + fi.clone() * gj.clone() * mom(i + j);
            }
        }
        acc
    };
    let shift = |f: &[T]| -> Vec<T> {
        let mut out = vec![T::zero()];
        out.extend(f.iter().cloned());
        out
    };

    let mut b = Vec::with_capacity(n);
    let mut a = Vec::with_capacity(n - 1);
    let mut pivots = Vec::with_capacity(n);
    pivots.push(T::one());
    b.push(mom(1));

    let mut p_prev: Vec<T> = vec![T::one()];
    let mut p_cur: Vec<T> = vec![-mom(1), T::one()];
    let mut nu_prev = T::one();
    for k in 1..n {
        let nu = ip(&p_cur, &p_cur);
        if nu <= T::zero() {
            return Err(MomentError::NotPositiveDefinite { order: k + 1 });
        }
        pivots.push(nu.clone());
        let ak = nu.clone() / nu_prev.clone();
        let xp = shift(&p_cur);
        let bk = ip(&xp, &p_cur) / nu.clone();
        a.push(ak.clone());
        b.push(bk.clone());
        if k + 1 < n {
            let mut next = xp;
            for (i, c) in p_cur.iter().enumerate() {
                next[i] = next[i].clone() - bk.clone() * c.clone();
            }
            for (i, c) in p_prev.iter().enumerate() {
                next[i] = next[i].clone() - ak.clone() * c.clone();
            }
            p_prev = p_cur;
            p_cur = next;
            nu_prev = nu;
        }
    }
    let c = RecurrenceCoefficients::new(b, a)?;
    Ok((c, pivots))
}
