//! Limit objects for random moment vectors: Catalan numbers and their
//! generalized triangular table, the moments of the arcsine,
//! Marchenko–Pastur and semicircle laws, the lower-triangular scaling
//! matrices A, C, D whose inverses standardize moment fluctuations, and the
//! derivative array `u_{i,j}` together with its closed form.
//!
//! Everything here is exact: integers are arbitrary precision and matrix
//! entries are rationals (`A` is dyadic, `C` and `D` are integer).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Binomial coefficient with the edge convention the closed forms rely on:
/// `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for t in 0..k {
        acc = acc * Int::from(n - t) / Int::from(t + 1);
    }
    acc
}

/// `c_k = C(2k, k)/(k+1)`, the k-th Catalan number (`c_1 = 1, c_2 = 2, …`).
pub fn catalan(k: u64) -> Int {
    binomial(2 * k, k as i64) / Int::from(k + 1)
}

/// Moments of the Marchenko–Pastur law: `m_k(η) = c_k`, `k = 1..K`.
pub fn mp_moments(k: usize) -> Vec<Int> {
    (1..=k as u64).map(catalan).collect()
}

/// Moments of the semicircle law on `[−2, 2]`: odd moments vanish, even
/// moments are Catalan numbers.
pub fn semicircle_moments(k: usize) -> Vec<Int> {
    (1..=k as u64)
        .map(|j| if j % 2 == 0 { catalan(j / 2) } else { Int::zero() })
        .collect()
}

/// Arcsine moments on `[0, 1]`: `m_j = C(2j, j)/4^j`.
pub fn arcsine_moments_unit(k: usize) -> Vec<Rat> {
    (1..=k as u64)
        .map(|j| Rat::new(binomial(2 * j, j as i64), Int::from(2).pow(2 * j as u32)))
        .collect()
}

/// Arcsine moments on `[a, b]`, the affine image of the unit-interval ones.
pub fn arcsine_moments(k: usize, a: &Rat, b: &Rat) -> Vec<Rat> {
    let unit = arcsine_moments_unit(k);
    let width = b - a;
    let mut out = Vec::with_capacity(k);
    for j in 1..=k {
        // m'_j = Σ C(j,i) a^{j−i} w^i m_i with m_0 = 1.
        let mut acc = Rat::zero();
        for i in 0..=j {
            let mi = if i == 0 { Rat::one() } else { unit[i - 1].clone() };
            let c = Rat::from_integer(binomial(j as u64, i as i64));
            acc += c * a.pow((j - i) as i32) * width.pow(i as i32) * mi;
        }
        out.push(acc);
    }
    out
}

/// Which of the three standardization matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalingMatrixKind {
    /// Bounded case: `a_{i,j} = 2^{−2i+2} C(2i, i−j)`, the Jacobian of
    /// `p ↦ m` on `[0,1]` at the arcsine point `p = (1/2,…,1/2)`.
    A,
    /// Half-line case: `c_{i,j} = C(2i, i−j) − C(2i, i−j−1)`, the Jacobian
    /// of `z ↦ m` at `z = (1,…,1)`; unit diagonal.
    C,
    /// Real-line case: `d_{i,j} = C(i, (i−j)/2) − C(i, (i−j)/2 − 1)` for
    /// even `i+j`, zero otherwise; the Jacobian of `(b,a) ↦ m` at the
    /// semicircle point `b = 0, a = 1` in ξ-order.
    D,
}

/// Lower-triangular scaling matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingMatrix {
    kind: ScalingMatrixKind,
    dim: usize,
    rows: Vec<Vec<Rat>>,
}

impl ScalingMatrix {
    pub fn a(k: usize) -> Self {
        let rows = (1..=k as u64)
            .map(|i| {
                (1..=i)
                    .map(|j| {
                        Rat::new(
                            binomial(2 * i, (i - j) as i64),
                            Int::from(2).pow(2 * i as u32 - 2),
                        )
                    })
                    .collect()
            })
            .collect();
        ScalingMatrix { kind: ScalingMatrixKind::A, dim: k, rows }
    }

    pub fn c(k: usize) -> Self {
        let rows = (1..=k as u64)
            .map(|i| {
                (1..=i)
                    .map(|j| {
                        let d = (i - j) as i64;
                        Rat::from_integer(binomial(2 * i, d) - binomial(2 * i, d - 1))
                    })
                    .collect()
            })
            .collect();
        ScalingMatrix { kind: ScalingMatrixKind::C, dim: k, rows }
    }

    pub fn d(k: usize) -> Self {
        let rows = (1..=k as u64)
            .map(|i| {
                (1..=i)
                    .map(|j| {
                        if (i + j) % 2 == 1 {
                            Rat::zero()
                        } else {
                            let h = ((i - j) / 2) as i64;
                            Rat::from_integer(binomial(i, h) - binomial(i, h - 1))
                        }
                    })
                    .collect()
            })
            .collect();
        ScalingMatrix { kind: ScalingMatrixKind::D, dim: k, rows }
    }

    pub fn of(kind: ScalingMatrixKind, k: usize) -> Self {
        match kind {
            ScalingMatrixKind::A => Self::a(k),
            ScalingMatrixKind::C => Self::c(k),
            ScalingMatrixKind::D => Self::d(k),
        }
    }

    pub fn kind(&self) -> ScalingMatrixKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `(i, j)`, 1-based; zero above the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> Rat {
        if j > i || i > self.dim {
            Rat::zero()
        } else {
            self.rows[i - 1][j - 1].clone()
        }
    }

    /// Dense `f64` rows (full square shape, zeros above the diagonal).
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (1..=self.dim)
            .map(|i| (1..=self.dim).map(|j| self.entry(i, j).to_f64().unwrap()).collect())
            .collect()
    }
}

/// Generalized Catalan numbers `g⁰_{i,j} = C(i+j, i) − C(i+j, i−1)`,
/// `0 ≤ i ≤ j`; the Skibinsky array at `z = (1,…,1)`.
pub fn generalized_catalan(i: u64, j: u64) -> Int {
    assert!(i <= j, "generalized Catalan numbers need 0 <= i <= j");
    binomial(i + j, i as i64) - binomial(i + j, i as i64 - 1)
}

/// Derivative array `u_{i,j} = ∂g_{i,j}/∂z_r` at `z = 1`, built from the
/// recursion `u_{i,j} = u_{i,j−1} + u_{i−1,j} + δ_{r,j−i+1} g⁰_{i−1,j}` with
/// `u_{0,j} = 0`. Returned as rows `u[i][j−i]` for `i ≤ j ≤ n`.
pub fn u_array(r: usize, n: usize) -> Vec<Vec<Int>> {
    assert!(r >= 1);
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n + 1);
    rows.push(vec![Int::zero(); n + 1]);
    for i in 1..=n {
        let mut row: Vec<Int> = Vec::with_capacity(n - i + 1);
        for j in i..=n {
            let left = if j > i { row[j - i - 1].clone() } else { Int::zero() };
            let up = rows[i - 1][j - (i - 1)].clone();
            let source = if j + 1 == i + r {
                generalized_catalan(i as u64 - 1, j as u64)
            } else {
                Int::zero()
            };
            row.push(left + up + source);
        }
        rows.push(row);
    }
    rows
}

/// Closed form for `u_{i,j}` (`0 ≤ i ≤ j`, `r ≥ 1`):
///
/// ```text
/// u_{i,j} = C(i+j, i−1)  − C(i+j, i−r−1)   if j − i ≥ r,
///           C(i+j, j−r) − C(i+j, i−r−1)   if 0 ≤ j − i < r.
/// ```
pub fn u_closed_form(i: u64, j: u64, r: u64) -> Int {
    assert!(i <= j && r >= 1);
    let n = i + j;
    if j - i >= r {
        binomial(n, i as i64 - 1) - binomial(n, i as i64 - r as i64 - 1)
    } else {
        binomial(n, j as i64 - r as i64) - binomial(n, i as i64 - r as i64 - 1)
    }
}
