//! Finitely supported spectral measures.

use momentforge_core::{MomentVector, SupportClass};

use crate::{EnsembleError, Result};

/// A probability measure `Σ w_i δ_{λ_i}` with sorted distinct atoms and
/// positive weights summing to one (within 1e−12).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMeasure {
    atoms: Vec<f64>,
    weights: Vec<f64>,
}

impl SpectralMeasure {
    pub fn new(atoms: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if atoms.is_empty() || atoms.len() != weights.len() {
            return Err(EnsembleError::InvalidMeasure("atom/weight lengths differ or empty"));
        }
        if atoms.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(EnsembleError::InvalidMeasure("atoms must be strictly increasing"));
        }
        if weights.iter().any(|w| !(*w > 0.0)) {
            return Err(EnsembleError::InvalidMeasure("weights must be positive"));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(EnsembleError::InvalidMeasure("weights must sum to one"));
        }
        Ok(SpectralMeasure { atoms, weights })
    }

    pub fn atoms(&self) -> &[f64] {
        &self.atoms
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Rescales every atom by `c` (weights untouched).
    pub fn scale_atoms(mut self, c: f64) -> Result<Self> {
        for a in &mut self.atoms {
            *a *= c;
        }
        if c < 0.0 {
            self.atoms.reverse();
            self.weights.reverse();
        }
        Ok(SpectralMeasure { atoms: self.atoms, weights: self.weights })
    }
}

/// Power moments `m_j = Σ w_i λ_i^j`, `j = 1..k`, as a real-line moment
/// vector.
pub fn spectral_moments(mu: &SpectralMeasure, k: usize) -> MomentVector<f64> {
    let mut values = Vec::with_capacity(k);
    let mut powers: Vec<f64> = vec![1.0; mu.len()];
    for _ in 1..=k {
        for (p, a) in powers.iter_mut().zip(mu.atoms()) {
            *p *= a;
        }
        values.push(powers.iter().zip(mu.weights()).map(|(p, w)| p * w).sum());
    }
    MomentVector::new(SupportClass::RealLine, values).expect("k >= 1")
}
