//! Density evaluation on moment spaces.
//!
//! Each density lives on the moment coordinates; evaluation transforms the
//! point to its native coordinates and multiplies the product form with the
//! normalizing constant. Everything is computed in log space (the CLT and
//! limit regimes push exponents into the thousands) and exponentiated at
//! the end; points outside the interior get density 0 (log-density −∞).

use momentforge_core::{moments_to_canonical, moments_to_recurrence, moments_to_z, MomentVector, SupportClass};
use statrs::function::gamma::ln_gamma;

use crate::params::MomentLawParams;
use crate::{DistributionError, Result};

fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// `log f_n^{(γ,δ)}(m)` on `M_n([a,b])`; −∞ outside the interior.
///
/// `f_n = c_n^{[a,b]} ∏ p_k^{γ_k} (1−p_k)^{δ_k}` with
/// `c_n^{[a,b]} = {(b−a)^{n(n+1)/2} ∏ B(n−k+γ_k+1, n−k+δ_k+1)}^{−1}`.
pub fn log_density_f(m: &MomentVector<f64>, params: &MomentLawParams) -> Result<f64> {
    let SupportClass::Bounded { a, b } = *params.support() else {
        return Err(DistributionError::InvalidParams("bounded support required"));
    };
    let n = params.dimension();
    if m.len() != n {
        return Err(DistributionError::InvalidParams("dimension mismatch"));
    }
    match m.support() {
        SupportClass::Bounded { a: ma, b: mb } if *ma == a && *mb == b => {}
        _ => return Err(DistributionError::InvalidParams("support mismatch")),
    }
    let Ok(p) = moments_to_canonical(m) else {
        return Ok(f64::NEG_INFINITY);
    };
    let mut log = 0.0;
    for (k, pk) in p.values().iter().enumerate() {
        if *pk <= 0.0 || *pk >= 1.0 {
            return Ok(f64::NEG_INFINITY);
        }
        let (g, d) = (params.gamma()[k], params.delta()[k]);
        let nk = (n - k - 1) as f64;
        log += g * pk.ln() + d * (1.0 - pk).ln();
        log -= ln_beta(nk + g + 1.0, nk + d + 1.0);
    }
    log -= (n * (n + 1) / 2) as f64 * (b - a).ln();
    Ok(log)
}

/// `f_n^{(γ,δ)}(m)`; 0 outside the interior.
pub fn density_f(m: &MomentVector<f64>, params: &MomentLawParams) -> Result<f64> {
    Ok(log_density_f(m, params)?.exp())
}

/// `log g_n^{(γ,δ)}(m)` on `M_n([0,∞))`; −∞ outside the interior.
///
/// `g_n = c_n^{[0,∞)} ∏ z_k^{γ_k} e^{−δ_k z_k}` with
/// `c_n^{[0,∞)} = ∏ δ_k^{γ_k+n−k+1}/Γ(γ_k+n−k+1)`.
pub fn log_density_g(m: &MomentVector<f64>, params: &MomentLawParams) -> Result<f64> {
    if !matches!(params.support(), SupportClass::HalfLine) {
        return Err(DistributionError::InvalidParams("half-line support required"));
    }
    let n = params.dimension();
    if m.len() != n {
        return Err(DistributionError::InvalidParams("dimension mismatch"));
    }
    if !matches!(m.support(), SupportClass::HalfLine) {
        return Err(DistributionError::InvalidParams("support mismatch"));
    }
    let Ok(z) = moments_to_z(m) else {
        return Ok(f64::NEG_INFINITY);
    };
    let mut log = 0.0;
    for (k, zk) in z.values().iter().enumerate() {
        if *zk <= 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        let (g, d) = (params.gamma()[k], params.delta()[k]);
        let shape = g + (n - k - 1) as f64 + 1.0;
        log += g * zk.ln() - d * zk;
        log += shape * d.ln() - ln_gamma(shape);
    }
    Ok(log)
}

/// `g_n^{(γ,δ)}(m)`; 0 outside the interior.
pub fn density_g(m: &MomentVector<f64>, params: &MomentLawParams) -> Result<f64> {
    Ok(log_density_g(m, params)?.exp())
}

/// `log h_{2n−1}^{(γ,δ)}(m)` on `M_{2n−1}(ℝ)`; −∞ outside the interior.
///
/// ```text
/// h = ∏_{k=1}^n √(δ_{2k−1}/π) e^{−δ_{2k−1} b_k²}
///   · ∏_{k=1}^{n−1} δ_{2k}^{γ_k+2n−2k}/Γ(γ_k+2n−2k) · a_k^{γ_k} e^{−δ_{2k} a_k}
/// ```
pub fn log_density_h(m: &MomentVector<f64>, params: &MomentLawParams) -> Result<f64> {
    if !matches!(params.support(), SupportClass::RealLine) {
        return Err(DistributionError::InvalidParams("real-line support required"));
    }
    let n = params.n();
    if m.len() != 2 * n - 1 {
        return Err(DistributionError::InvalidParams("dimension mismatch"));
    }
    if !matches!(m.support(), SupportClass::RealLine) {
        return Err(DistributionError::InvalidParams("support mismatch"));
    }
    let Ok(c) = moments_to_recurrence(m) else {
        return Ok(f64::NEG_INFINITY);
    };
    let mut log = 0.0;
    for k in 1..=n {
        let bk = c.diagonal()[k - 1];
        let d = params.delta()[2 * k - 2];
        log += 0.5 * (d / std::f64::consts::PI).ln() - d * bk * bk;
    }
    for k in 1..n {
        let ak = c.off_diagonal()[k - 1];
        if ak <= 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        let g = params.gamma()[k - 1];
        let d = params.delta()[2 * k - 1];
        let shape = g + 2.0 * (n - k) as f64;
        log += g * ak.ln() - d * ak;
        log += shape * d.ln() - ln_gamma(shape);
    }
    Ok(log)
}

/// `h_{2n−1}^{(γ,δ)}(m)`; 0 outside the interior.
pub fn density_h(m: &MomentVector<f64>, params: &MomentLawParams) -> Result<f64> {
    Ok(log_density_h(m, params)?.exp())
}
