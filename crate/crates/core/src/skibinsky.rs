//! Triangular moment recursion on the half line.
//!
//! The array `g_{i,j}` is defined by `g_{0,j} = 1`, `g_{i,j} = 0` for
//! `i > j` and
//!
//! ```text
//! g_{i,j} = g_{i,j−1} + z_{j−i+1} · g_{i−1,j},   1 ≤ i ≤ j,
//! ```
//!
//! and its diagonal recovers the ordinary moments: `m_k = g_{k,k}`. Running
//! the recursion forward maps `z ↦ m` in `O(N²)`; inverting it column by
//! column maps `m ↦ z` and doubles as the interiority test for `M_N([0,∞))`.

use crate::support::SupportClass;
use crate::types::{MomentVector, ZVector};
use crate::{interior::Coordinate, MomentError, Result, Scalar};

/// The triangular array `g_{i,j}`, `0 ≤ i ≤ j ≤ N`, kept for diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct SkibinskyArray<T> {
    // cols[j][i] = g_{i,j}, one column per 0 ≤ j ≤ N with entries 0 ≤ i ≤ j.
    cols: Vec<Vec<T>>,
}

impl<T: Scalar> SkibinskyArray<T> {
    /// Runs the forward recursion for `z_1..z_N`.
    pub fn from_z(z: &[T]) -> Result<Self> {
        if z.is_empty() {
            return Err(MomentError::EmptyInput);
        }
        let n = z.len();
        let mut cols: Vec<Vec<T>> = Vec::with_capacity(n + 1);
        cols.push(vec![T::one()]);
        for j in 1..=n {
            let mut col = Vec::with_capacity(j + 1);
            col.push(T::one());
            for i in 1..=j {
                // g_{i,j-1} is zero when i > j-1 (below the triangle).
                let left = if i <= j - 1 {
                    cols[j - 1][i].clone()
                } else {
                    T::zero()
                };
                let up = col[i - 1].clone();
                col.push(left + z[j - i].clone() * up);
            }
            cols.push(col);
        }
        Ok(SkibinskyArray { cols })
    }

    /// Dimension `N` of the underlying vector.
    pub fn dimension(&self) -> usize {
        self.cols.len() - 1
    }

    /// `g_{i,j}`; zero below the triangle.
    pub fn g(&self, i: usize, j: usize) -> T {
        if i > j || j >= self.cols.len() {
            T::zero()
        } else {
            self.cols[j][i].clone()
        }
    }

    /// The diagonal `m_k = g_{k,k}`, `k = 1..N`.
    pub fn moments(&self) -> Vec<T> {
        (1..self.cols.len()).map(|k| self.cols[k][k].clone()).collect()
    }
}

/// Forward map `z ↦ m` on the half line; tolerates boundary zeros in `z`.
pub fn skibinsky_forward<T: Scalar>(z: &ZVector<T>) -> Result<MomentVector<T>> {
    let array = SkibinskyArray::from_z(z.values())?;
    MomentVector::new(SupportClass::HalfLine, array.moments())
}

/// Forward map exposing the full array for diagnostics.
pub fn skibinsky_array<T: Scalar>(z: &ZVector<T>) -> Result<SkibinskyArray<T>> {
    SkibinskyArray::from_z(z.values())
}

/// Inverse map `m ↦ z` on the half line.
///
/// Column `j` is reconstructed from the known diagonal entry `m_j` upward,
/// dividing by the already-recovered `z`'s; the top entry then yields
/// `z_j = (g_{1,j} − g_{1,j−1}) / g_{0,j}`. Any nonpositive pivot or
/// recovered coordinate means `m` is not interior.
pub fn moments_to_z<T: Scalar>(m: &MomentVector<T>) -> Result<ZVector<T>> {
    if !matches!(m.support(), SupportClass::HalfLine) {
        return Err(MomentError::SupportMismatch {
            required: "halfline",
        });
    }
    moments_to_z_raw(m.values()).map(|z| ZVector::new(z).expect("positive by construction"))
}

/// Inversion on a bare slice; used internally by the bounded-support chain.
pub(crate) fn moments_to_z_raw<T: Scalar>(m: &[T]) -> Result<Vec<T>> {
    if m.is_empty() {
        return Err(MomentError::EmptyInput);
    }
    let n = m.len();
    let non_interior = |index: usize| MomentError::NonInteriorMoments {
        index,
        coordinate: Coordinate::ZParameter,
    };

    if m[0] <= T::zero() {
        return Err(non_interior(1));
    }
    let mut z = Vec::with_capacity(n);
    z.push(m[0].clone());

    // prev[i] = g_{i,j-1}; cur[i] = g_{i,j}.
    let mut prev: Vec<T> = vec![T::one(), m[0].clone()];
    for j in 2..=n {
        let mut cur = vec![T::zero(); j + 1];
        cur[0] = T::one();
        cur[j] = m[j - 1].clone();
        for i in (1..j).rev() {
            // g_{i+1,j} = g_{i+1,j-1} + z_{j-i} g_{i,j}, solved for g_{i,j}.
            let left = if i + 1 <= j - 1 {
                prev[i + 1].clone()
            } else {
                T::zero()
            };
            let num = cur[i + 1].clone() - left;
            let piv = z[j - i - 1].clone();
            if num <= T::zero() || piv <= T::zero() {
                return Err(non_interior(j));
            }
            cur[i] = num / piv;
        }
        let zj = cur[1].clone() - prev[1].clone();
        if zj <= T::zero() {
            return Err(non_interior(j));
        }
        z.push(zj);
        prev = cur;
    }
    Ok(z)
}
