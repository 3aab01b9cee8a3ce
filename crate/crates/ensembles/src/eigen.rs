//! Symmetric tridiagonal eigensolver with first-row eigenvector
//! accumulation.
//!
//! Implicit-shift QL (the classic tql2 scheme from the EISPACK/JAMA
//! lineage). The spectral measure only needs the first component of every
//! eigenvector, so the default run accumulates e₁ᵀQ — a single rotating row
//! — which keeps the whole decomposition O(n²). The full-Q variant exists
//! for residual tests.

use crate::measure::SpectralMeasure;
use crate::tridiagonal::TridiagonalMatrix;
use crate::{EnsembleError, Result};

/// Iterations allowed per eigenvalue before giving up.
pub const MAX_QL_ITERATIONS: usize = 50;

pub(crate) trait RotationSink {
    /// Applies the Givens rotation acting on columns (i, i+1):
    /// `q_{i+1} ← s·q_i + c·q_{i+1}`, `q_i ← c·q_i − s·q_{i+1}`.
    fn rotate(&mut self, i: usize, c: f64, s: f64);
}

/// Accumulates only the first row of Q.
pub(crate) struct FirstRow(pub Vec<f64>);

impl FirstRow {
    pub fn identity(n: usize) -> Self {
        let mut row = vec![0.0; n];
        row[0] = 1.0;
        FirstRow(row)
    }
}

impl RotationSink for FirstRow {
    fn rotate(&mut self, i: usize, c: f64, s: f64) {
        let h = self.0[i + 1];
        self.0[i + 1] = s * self.0[i] + c * h;
        self.0[i] = c * self.0[i] - s * h;
    }
}

/// Accumulates the dense Q (tests only).
pub(crate) struct FullQ(pub Vec<Vec<f64>>);

impl FullQ {
    pub fn identity(n: usize) -> Self {
        let mut q = vec![vec![0.0; n]; n];
        for (i, row) in q.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        FullQ(q)
    }
}

impl RotationSink for FullQ {
    fn rotate(&mut self, i: usize, c: f64, s: f64) {
        for row in &mut self.0 {
            let h = row[i + 1];
            row[i + 1] = s * row[i] + c * h;
            row[i] = c * row[i] - s * h;
        }
    }
}

/// Implicit-shift QL on (diagonal `d`, superdiagonal `e`), rotations fed to
/// `sink`. On return `d` holds eigenvalues (unsorted).
pub(crate) fn tql2(d: &mut [f64], e: &mut [f64], sink: &mut impl RotationSink) -> Result<()> {
    let n = d.len();
    let eps = 2.0_f64.powi(-52);
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_QL_ITERATIONS {
                    return Err(EnsembleError::ConvergenceFailure {
                        index: l,
                        max_iter: MAX_QL_ITERATIONS,
                    });
                }

                // Implicit shift from the 2x2 corner.
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                // QL sweep from m-1 down to l.
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let gi = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * gi;
                    d[i + 1] = h + s * (c * gi + s * d[i]);
                    sink.rotate(i, c, s);
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Spectral measure of a symmetric tridiagonal matrix: eigenvalues as
/// atoms, squared first eigenvector components as weights (renormalized to
/// sum one). Requires strictly positive off-diagonal entries, which makes
/// the eigenvalues distinct.
pub fn spectral_measure(t: &TridiagonalMatrix) -> Result<SpectralMeasure> {
    let n = t.dim();
    if t.off().iter().any(|c| !(*c > 0.0)) {
        return Err(EnsembleError::InvalidSpec("off-diagonal entries must be positive"));
    }
    let mut d = t.diag().to_vec();
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(t.off());
    let mut sink = FirstRow::identity(n);
    tql2(&mut d, &mut e, &mut sink)?;

    let mut pairs: Vec<(f64, f64)> = d.into_iter().zip(sink.0).map(|(x, r)| (x, r * r)).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let total: f64 = pairs.iter().map(|(_, w)| w).sum();
    let atoms: Vec<f64> = pairs.iter().map(|(x, _)| *x).collect();
    let weights: Vec<f64> = pairs.iter().map(|(_, w)| w / total).collect();
    SpectralMeasure::new(atoms, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use momentforge_core::{recurrence_to_moments, RecurrenceCoefficients};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn two_by_two_symmetric() {
        let t = TridiagonalMatrix::new(vec![0.0, 0.0], vec![1.0]).unwrap();
        let mu = spectral_measure(&t).unwrap();
        assert!((mu.atoms()[0] + 1.0).abs() < 1e-14);
        assert!((mu.atoms()[1] - 1.0).abs() < 1e-14);
        assert!((mu.weights()[0] - 0.5).abs() < 1e-14);
        assert!((mu.weights()[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn arcsine_jacobi_block() {
        // d = (1/2, 1/2), c = sqrt(1/8): atoms 1/2 ∓ sqrt(1/8), weights 1/2.
        let c = 0.125_f64.sqrt();
        let t = TridiagonalMatrix::new(vec![0.5, 0.5], vec![c]).unwrap();
        let mu = spectral_measure(&t).unwrap();
        assert!((mu.atoms()[0] - (0.5 - c)).abs() < 1e-14);
        assert!((mu.atoms()[1] - (0.5 + c)).abs() < 1e-14);
        assert!((mu.weights()[0] - 0.5).abs() < 1e-13);
        assert!((mu.weights()[1] - 0.5).abs() < 1e-13);
    }

    #[test]
    fn single_atom() {
        let t = TridiagonalMatrix::new(vec![0.7], vec![]).unwrap();
        let mu = spectral_measure(&t).unwrap();
        assert_eq!(mu.atoms(), &[0.7]);
        assert_eq!(mu.weights(), &[1.0]);
    }

    #[test]
    fn residual_contract_holds() {
        // ‖T v − λ v‖ ≤ 1e−10 ‖T‖ per eigenpair, via the full-Q variant.
        let mut rng = ChaCha12Rng::seed_from_u64(9);
        for trial in 0..20 {
            let n = 2 + trial % 24;
            let diag: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
            let off: Vec<f64> = (0..n - 1).map(|_| rng.random_range(0.05..2.0)).collect();
            let mut d = diag.clone();
            let mut e = vec![0.0; n];
            e[..n - 1].copy_from_slice(&off);
            let mut q = FullQ::identity(n);
            tql2(&mut d, &mut e, &mut q).unwrap();

            let norm = diag
                .iter()
                .map(|x| x.abs())
                .chain(off.iter().map(|x| 2.0 * x.abs()))
                .fold(0.0_f64, f64::max);
            for (j, &lambda) in d.iter().enumerate() {
                let v: Vec<f64> = (0..n).map(|i| q.0[i][j]).collect();
                let mut res = 0.0_f64;
                for i in 0..n {
                    let mut t = diag[i] * v[i];
                    if i > 0 {
                        t += off[i - 1] * v[i - 1];
                    }
                    if i + 1 < n {
                        t += off[i] * v[i + 1];
                    }
                    res += (t - lambda * v[i]).powi(2);
                }
                assert!(res.sqrt() <= 1e-10 * norm.max(1.0), "residual {}", res.sqrt());
            }
        }
    }

    #[test]
    fn first_row_matches_full_q() {
        let mut rng = ChaCha12Rng::seed_from_u64(10);
        let n = 12;
        let diag: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let off: Vec<f64> = (0..n - 1).map(|_| rng.random_range(0.1..1.5)).collect();

        let mut d1 = diag.clone();
        let mut e1 = vec![0.0; n];
        e1[..n - 1].copy_from_slice(&off);
        let mut row = FirstRow::identity(n);
        tql2(&mut d1, &mut e1, &mut row).unwrap();

        let mut d2 = diag.clone();
        let mut e2 = vec![0.0; n];
        e2[..n - 1].copy_from_slice(&off);
        let mut q = FullQ::identity(n);
        tql2(&mut d2, &mut e2, &mut q).unwrap();

        for j in 0..n {
            assert!((row.0[j] - q.0[0][j]).abs() < 1e-13);
        }
    }

    #[test]
    fn spectral_moments_match_recurrence_route() {
        // The measure's power moments must equal the Jacobi-matrix moments
        // of (b, a = c²); this ties the eigensolver to the transform crate.
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = rng.random_range(1..=10usize);
            let diag: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let off: Vec<f64> = (0..n - 1).map(|_| rng.random_range(0.2..1.5)).collect();
            let t = TridiagonalMatrix::new(diag.clone(), off.clone()).unwrap();
            let mu = spectral_measure(&t).unwrap();
            let m = crate::measure::spectral_moments(&mu, 2 * n - 1);

            let a: Vec<f64> = off.iter().map(|c| c * c).collect();
            let c = RecurrenceCoefficients::new(diag, a).unwrap();
            let reference = recurrence_to_moments(&c).unwrap();
            for (x, y) in m.values().iter().zip(reference.values()) {
                assert!((x - y).abs() <= 1e-9 * y.abs().max(1.0), "{x} vs {y}");
            }
        }
    }
}
