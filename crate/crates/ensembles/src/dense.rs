//! Dense matrix oracles for β ∈ {1, 2}.
//!
//! Independent of the tridiagonal route end to end: the random matrix is
//! built from raw Gaussians and decomposed with nalgebra's symmetric
//! eigensolver. Scaling conventions are pinned by the n = 1 laws:
//!
//! * Hermite: `A = (X + X*)/2` — diagonal entries N(0,1), so the n=1 atom
//!   has the weight `e^{−λ²/2}`. (The √2 normalization would give variance
//!   2, i.e. weight `e^{−λ²/4}`.)
//! * Laguerre β=1: `W = XXᵀ/2`, `X` real n×m standard normal with
//!   `m = 2γ₀+n+1`; β=2: `W = XX*`, complex entries with Re, Im ~
//!   N(0, 1/2), `m = γ₀+n`. Both give the n=1 atom ~ Gamma(γ₀+1, rate 1),
//!   matching the weight `λ^{γ₀} e^{−λ}`.
//!
//! Complex Hermitian matrices are embedded as real symmetric ones of twice
//! the size ([[Re, −Im], [Im, Re]]); every eigenvalue doubles and the
//! spectral weight of an atom is the summed squared first components over
//! its two-dimensional eigenspace.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::measure::SpectralMeasure;
use crate::spec::EnsembleKind;
use crate::{EnsembleError, Result};

/// Spectral measure of one dense draw. `gamma0` is ignored for Hermite.
/// For Laguerre the exponent must be representable by an integer second
/// dimension: γ₀ integer at β = 2, 2γ₀ integer at β = 1.
pub fn dense_oracle<R: Rng + ?Sized>(
    kind: EnsembleKind,
    n: usize,
    beta: f64,
    gamma0: f64,
    rng: &mut R,
) -> Result<SpectralMeasure> {
    if n == 0 {
        return Err(EnsembleError::InvalidSpec("matrix size must be positive"));
    }
    if beta != 1.0 && beta != 2.0 {
        return Err(EnsembleError::UnsupportedBeta { beta });
    }
    match kind {
        EnsembleKind::Hermite => {
            if beta == 1.0 {
                let x = gaussian_matrix(n, n, 1.0, rng);
                let a = (&x + x.transpose()) * 0.5;
                real_spectral_measure(a)
            } else {
                let xr = gaussian_matrix(n, n, 1.0, rng);
                let xi = gaussian_matrix(n, n, 1.0, rng);
                // A = (X + X*)/2: Re A = (Xr + Xrᵀ)/2, Im A = (Xi − Xiᵀ)/2.
                let re = (&xr + xr.transpose()) * 0.5;
                let im = (&xi - xi.transpose()) * 0.5;
                hermitian_spectral_measure(re, im)
            }
        }
        EnsembleKind::Laguerre => {
            if beta == 1.0 {
                let m2 = 2.0 * gamma0 + n as f64 + 1.0;
                let m = require_integer(m2, "2*gamma0 + n + 1 must be a positive integer")?;
                let x = gaussian_matrix(n, m, 1.0, rng);
                let w = (&x * x.transpose()) * 0.5;
                real_spectral_measure(w)
            } else {
                let m2 = gamma0 + n as f64;
                let m = require_integer(m2, "gamma0 + n must be a positive integer")?;
                let half = std::f64::consts::FRAC_1_SQRT_2;
                let xr = gaussian_matrix(n, m, half, rng);
                let xi = gaussian_matrix(n, m, half, rng);
                // W = XX*: Re = XrXrᵀ + XiXiᵀ, Im = XiXrᵀ − XrXiᵀ.
                let re = &xr * xr.transpose() + &xi * xi.transpose();
                let im = &xi * xr.transpose() - &xr * xi.transpose();
                hermitian_spectral_measure(re, im)
            }
        }
        EnsembleKind::Jacobi => Err(EnsembleError::InvalidSpec(
            "no dense Jacobi oracle; use the two in-model routes",
        )),
    }
}

fn require_integer(x: f64, msg: &'static str) -> Result<usize> {
    if x < 1.0 || (x - x.round()).abs() > 1e-9 {
        return Err(EnsembleError::InvalidSpec(msg));
    }
    Ok(x.round() as usize)
}

fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, sd: f64, rng: &mut R) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| {
        let g: f64 = StandardNormal.sample(rng);
        sd * g
    })
}

fn real_spectral_measure(a: DMatrix<f64>) -> Result<SpectralMeasure> {
    let n = a.nrows();
    let eig = nalgebra::SymmetricEigen::new(a);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|j| (eig.eigenvalues[j], eig.eigenvectors[(0, j)].powi(2)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let total: f64 = pairs.iter().map(|(_, w)| w).sum();
    SpectralMeasure::new(
        pairs.iter().map(|(x, _)| *x).collect(),
        pairs.iter().map(|(_, w)| w / total).collect(),
    )
}

fn hermitian_spectral_measure(re: DMatrix<f64>, im: DMatrix<f64>) -> Result<SpectralMeasure> {
    let n = re.nrows();
    let mut big = DMatrix::<f64>::zeros(2 * n, 2 * n);
    big.view_mut((0, 0), (n, n)).copy_from(&re);
    big.view_mut((n, n), (n, n)).copy_from(&re);
    big.view_mut((0, n), (n, n)).copy_from(&(-&im));
    big.view_mut((n, 0), (n, n)).copy_from(&im);
    let eig = nalgebra::SymmetricEigen::new(big);
    let mut pairs: Vec<(f64, f64)> = (0..2 * n)
        .map(|j| (eig.eigenvalues[j], eig.eigenvectors[(0, j)].powi(2)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    // Doubled spectrum: consecutive pairs share an eigenvalue; the weight is
    // the squared modulus of the complex first component = sum over the pair.
    let mut atoms = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for c in pairs.chunks_exact(2) {
        atoms.push(0.5 * (c[0].0 + c[1].0));
        weights.push(c[0].1 + c[1].1);
    }
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    SpectralMeasure::new(atoms, weights)
}
