//! Ensemble parameterization.

use crate::{EnsembleError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    Jacobi,
    Laguerre,
    Hermite,
}

impl EnsembleKind {
    pub fn tag(&self) -> &'static str {
        match self {
            EnsembleKind::Jacobi => "jacobi",
            EnsembleKind::Laguerre => "laguerre",
            EnsembleKind::Hermite => "hermite",
        }
    }
}

/// Eigenvalue-density scaling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scaling {
    /// The plain densities: Jacobi on (0,1), Laguerre weight `λ^γ0 e^{−λ}`,
    /// Hermite weight `e^{−λ²/2}`.
    #[default]
    None,
    /// CLT-rescaled: Laguerre weight `e^{−βnλ/2}` (atoms scaled by 2/(βn)),
    /// Hermite weight `e^{−βnλ²/4}` (atoms scaled by √(2/(βn))). No-op for
    /// Jacobi, whose support is already compact.
    CltRescaled,
}

/// Gamma-shape convention for the Hermite off-diagonal entries; the two
/// candidates differ by one and only one of them survives the dense-oracle
/// comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HermiteShape {
    /// `a_k ~ Gamma((β/2)(n−k), 1)` — the standard tridiagonal model; the
    /// oracle-validated default.
    #[default]
    DumitriuEdelman,
    /// `a_k ~ Gamma((β/2)(n−k) − 1, 1)` — the shape the stated h-density
    /// parameters imply; degenerate at `k = n−1` for β ≤ 2.
    PaperStated,
}

/// Which ensemble to draw, at what size, with which parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub n: usize,
    pub beta: f64,
    /// Jacobi/Laguerre exponent `a` (called γ₀ here).
    pub gamma0: f64,
    /// Jacobi exponent `b` (called δ₀ here).
    pub delta0: f64,
    pub scaling: Scaling,
    pub hermite_shape: HermiteShape,
}

impl EnsembleSpec {
    pub fn jacobi(n: usize, beta: f64, gamma0: f64, delta0: f64) -> Result<Self> {
        Self::validate(n, beta)?;
        if !(gamma0 > -1.0) || !(delta0 > -1.0) {
            return Err(EnsembleError::InvalidSpec("Jacobi exponents must exceed -1"));
        }
        Ok(EnsembleSpec {
            kind: EnsembleKind::Jacobi,
            n,
            beta,
            gamma0,
            delta0,
            scaling: Scaling::None,
            hermite_shape: HermiteShape::default(),
        })
    }

    pub fn laguerre(n: usize, beta: f64, gamma0: f64) -> Result<Self> {
        Self::validate(n, beta)?;
        if !(gamma0 > -1.0) {
            return Err(EnsembleError::InvalidSpec("Laguerre exponent must exceed -1"));
        }
        Ok(EnsembleSpec {
            kind: EnsembleKind::Laguerre,
            n,
            beta,
            gamma0,
            delta0: 0.0,
            scaling: Scaling::None,
            hermite_shape: HermiteShape::default(),
        })
    }

    pub fn hermite(n: usize, beta: f64) -> Result<Self> {
        Self::validate(n, beta)?;
        Ok(EnsembleSpec {
            kind: EnsembleKind::Hermite,
            n,
            beta,
            gamma0: 0.0,
            delta0: 0.0,
            scaling: Scaling::None,
            hermite_shape: HermiteShape::default(),
        })
    }

    fn validate(n: usize, beta: f64) -> Result<()> {
        if n == 0 {
            return Err(EnsembleError::InvalidSpec("matrix size must be positive"));
        }
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(EnsembleError::InvalidSpec("beta must be positive"));
        }
        Ok(())
    }

    pub fn rescaled(mut self) -> Self {
        self.scaling = Scaling::CltRescaled;
        self
    }

    pub fn with_hermite_shape(mut self, shape: HermiteShape) -> Self {
        self.hermite_shape = shape;
        self
    }
}
