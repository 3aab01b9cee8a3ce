//! Parameter sets for the moment-space laws.

use momentforge_core::SupportClass;

use crate::{DistributionError, Result};

/// Parameters `(γ, δ)` of one of the three densities, together with the
/// support class and the space dimension.
///
/// Constraints by support:
/// * bounded: `γ_k > −1` and `δ_k > −1` (Beta exponents), `k = 1..n`;
/// * half line: `γ_k > −1` and `δ_k > 0` (Gamma rate), `k = 1..n`;
/// * real line (dimension `2n−1`): `δ_j > 0` for `j = 1..2n−1`; `γ_k > −1`
///   for the `n−1` a-indices, with the Gamma shape `γ_k + 2n − 2k` positive.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentLawParams {
    support: SupportClass<f64>,
    n: usize,
    gamma: Vec<f64>,
    delta: Vec<f64>,
}

impl MomentLawParams {
    pub fn bounded(a: f64, b: f64, n: usize, gamma: Vec<f64>, delta: Vec<f64>) -> Result<Self> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(DistributionError::InvalidParams("interval must satisfy a < b"));
        }
        if n == 0 || gamma.len() != n || delta.len() != n {
            return Err(DistributionError::InvalidParams("need n gamma and n delta entries"));
        }
        // Integrability of p^{γ_k+n−k}(1−p)^{δ_k+n−k} on (0,1): both Beta
        // parameters γ_k+n−k+1 and δ_k+n−k+1 must be positive. (γ_k > −1 for
        // all k is the special case where this holds at every dimension; the
        // ensemble parameter sequences need the weaker per-dimension form.)
        for k in 1..=n {
            let nk = (n - k) as f64;
            if !(gamma[k - 1] + nk + 1.0 > 0.0) || !(delta[k - 1] + nk + 1.0 > 0.0) {
                return Err(DistributionError::InvalidParams(
                    "Beta parameters gamma_k+n-k+1 and delta_k+n-k+1 must be positive",
                ));
            }
        }
        Ok(MomentLawParams { support: SupportClass::Bounded { a, b }, n, gamma, delta })
    }

    pub fn half_line(n: usize, gamma: Vec<f64>, delta: Vec<f64>) -> Result<Self> {
        if n == 0 || gamma.len() != n || delta.len() != n {
            return Err(DistributionError::InvalidParams("need n gamma and n delta entries"));
        }
        for k in 1..=n {
            let shape = gamma[k - 1] + (n - k) as f64 + 1.0;
            if !(shape > 0.0) {
                return Err(DistributionError::InvalidParams(
                    "Gamma shape gamma_k+n-k+1 must be positive",
                ));
            }
        }
        if delta.iter().any(|d| !(*d > 0.0)) {
            return Err(DistributionError::InvalidParams("delta (Gamma rate) must be positive"));
        }
        Ok(MomentLawParams { support: SupportClass::HalfLine, n, gamma, delta })
    }

    /// Real-line law on dimension `2n−1`: `gamma` has `n−1` entries (one per
    /// off-diagonal coordinate), `delta` has `2n−1`.
    pub fn real_line(n: usize, gamma: Vec<f64>, delta: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(DistributionError::InvalidParams("dimension must be positive"));
        }
        if gamma.len() + 1 != n || delta.len() != 2 * n - 1 {
            return Err(DistributionError::InvalidParams(
                "need n-1 gamma and 2n-1 delta entries",
            ));
        }
        if delta.iter().any(|d| !(*d > 0.0)) {
            return Err(DistributionError::InvalidParams("delta must be positive"));
        }
        for (k, g) in gamma.iter().enumerate() {
            let shape = g + 2.0 * (n - 1 - k) as f64;
            if !(*g > -1.0) || !(shape > 0.0) {
                return Err(DistributionError::InvalidParams("Gamma shape must be positive"));
            }
        }
        Ok(MomentLawParams { support: SupportClass::RealLine, n, gamma, delta })
    }

    /// Half-line CLT regime: `γ ≡ 0`, `δ_k = n`.
    pub fn half_line_clt(n: usize) -> Self {
        Self::half_line(n, vec![0.0; n], vec![n as f64; n]).expect("valid by construction")
    }

    /// Real-line CLT regime: `γ ≡ 0`, `δ_{2k−1} = n`, `δ_{2k} = 2n`.
    ///
    /// The even rates are 2n, not n: `a_k ~ Gamma(2n−2k, δ_{2k})` only
    /// centers at 1 with variance `1/(2n)` when `δ_{2k} = 2n`, which is what
    /// the `√(2n)(a_k − 1)` standardization and the semicircle centering
    /// require.
    pub fn real_line_clt(n: usize) -> Self {
        let delta: Vec<f64> = (1..=2 * n - 1)
            .map(|j| if j % 2 == 1 { n as f64 } else { 2.0 * n as f64 })
            .collect();
        Self::real_line(n, vec![0.0; n - 1], delta).expect("valid by construction")
    }

    /// Bounded CLT regime on `[0,1]`: `γ ≡ δ ≡ 0` (the uniform law on the
    /// moment space).
    pub fn bounded_clt(n: usize) -> Self {
        Self::bounded(0.0, 1.0, n, vec![0.0; n], vec![0.0; n]).expect("valid by construction")
    }

    pub fn support(&self) -> &SupportClass<f64> {
        &self.support
    }

    /// Space dimension: number of moment coordinates (`n`, or `2n−1` on ℝ).
    pub fn dimension(&self) -> usize {
        match self.support {
            SupportClass::RealLine => 2 * self.n - 1,
            _ => self.n,
        }
    }

    /// The `n` parameter (matrix-size analogue; equals `dimension` except on ℝ).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn delta(&self) -> &[f64] {
        &self.delta
    }

    /// Beta parameters `(α_k, β_k)` of `p_k` for the bounded family.
    pub fn beta_parameters(&self, k: usize) -> (f64, f64) {
        let nk = (self.n - k) as f64;
        (self.gamma[k - 1] + nk + 1.0, self.delta[k - 1] + nk + 1.0)
    }

    /// Gamma (shape, rate) of `z_k` for the half-line family.
    pub fn gamma_parameters(&self, k: usize) -> (f64, f64) {
        let nk = (self.n - k) as f64;
        (self.gamma[k - 1] + nk + 1.0, self.delta[k - 1])
    }

    /// Normal variance of `b_k` and Gamma (shape, rate) of `a_k` for the
    /// real-line family.
    pub fn real_line_parameters(&self, k: usize) -> (f64, Option<(f64, f64)>) {
        let var = 1.0 / (2.0 * self.delta[2 * k - 2]);
        let gamma_ak = if k < self.n {
            let shape = self.gamma[k - 1] + 2.0 * (self.n - k) as f64;
            Some((shape, self.delta[2 * k - 1]))
        } else {
            None
        };
        (var, gamma_ak)
    }
}

/// One general weight `f_k: (0,1) → [0,∞)` with a finite upper bound, the
/// handle the rejection sampler needs.
pub struct WeightFn {
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    bound: f64,
}

impl WeightFn {
    pub fn new(f: impl Fn(f64) -> f64 + Send + Sync + 'static, bound: f64) -> Self {
        WeightFn { f: Box::new(f), bound }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn bound(&self) -> f64 {
        self.bound
    }
}

/// Per-index weight functions for the general bounded-family density
/// `f_n ∝ ∏ f_k(p_k)·(p_k − p_k²)^{n−k}`.
pub struct GeneralWeightFamily {
    interval: (f64, f64),
    weights: Vec<WeightFn>,
}

impl GeneralWeightFamily {
    pub fn new(a: f64, b: f64, weights: Vec<WeightFn>) -> Result<Self> {
        if !(a < b) {
            return Err(DistributionError::InvalidParams("interval must satisfy a < b"));
        }
        if weights.is_empty() {
            return Err(DistributionError::InvalidParams("need at least one weight"));
        }
        if weights.iter().any(|w| !(w.bound() > 0.0) || !w.bound().is_finite()) {
            return Err(DistributionError::InvalidParams("weight bounds must be finite and positive"));
        }
        Ok(GeneralWeightFamily { interval: (a, b), weights })
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, k: usize) -> &WeightFn {
        &self.weights[k - 1]
    }
}
