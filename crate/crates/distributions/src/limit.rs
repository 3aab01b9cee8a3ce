//! Convergence of the bounded-interval densities to their unbounded limits.

use momentforge_core::{MomentVector, SupportClass};

use crate::density::{log_density_f, log_density_g, log_density_h};
use crate::params::MomentLawParams;
use crate::{DistributionError, Result};

/// One row of the convergence table produced by [`limit_density_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct LimitGap {
    /// Interval scale: `[0, d]` against `g`, `[−s, s]` against `h`.
    pub scale: f64,
    /// Bounded-interval density at the point with the theorem's parameters.
    pub bounded_density: f64,
    /// The limit density `g` (half line) or `h` (real line) at the point.
    pub limit_density: f64,
    /// `|f − limit|`.
    pub gap: f64,
}

/// Evaluates the bounded density against its limit along a grid of interval
/// scales.
///
/// * Half-line `params` (limit `g`): on `[0, d]` use `γ^{(d)} = γ`,
///   `δ^{(d)} = d·δ`.
/// * Real-line `params` (limit `h`): on `[−s, s]` use
///   `γ^{(s)}_{2k−1} = δ^{(s)}_{2k−1} = δ_{2k−1}s²`, `γ^{(s)}_{2k} = γ_k`,
///   `δ^{(s)}_{2k} = δ_{2k}s²`.
///
/// Scales too small to contain the point yield `PointNotInBoundedSpace`.
pub fn limit_density_check(
    point: &MomentVector<f64>,
    params: &MomentLawParams,
    grid: &[f64],
) -> Result<Vec<LimitGap>> {
    match params.support() {
        SupportClass::HalfLine => {
            let limit = log_density_g(point, params)?.exp();
            grid.iter()
                .map(|&d| {
                    let f = bounded_value_halfline(point, params, d)?;
                    Ok(LimitGap { scale: d, bounded_density: f, limit_density: limit, gap: (f - limit).abs() })
                })
                .collect()
        }
        SupportClass::RealLine => {
            let limit = log_density_h(point, params)?.exp();
            grid.iter()
                .map(|&s| {
                    let f = bounded_value_realline(point, params, s)?;
                    Ok(LimitGap { scale: s, bounded_density: f, limit_density: limit, gap: (f - limit).abs() })
                })
                .collect()
        }
        SupportClass::Bounded { .. } => {
            Err(DistributionError::InvalidParams("limit check needs an unbounded target"))
        }
    }
}

fn bounded_value_halfline(point: &MomentVector<f64>, params: &MomentLawParams, d: f64) -> Result<f64> {
    if !(d > 0.0) {
        return Err(DistributionError::InvalidParams("scale must be positive"));
    }
    let n = params.dimension();
    let gamma_d = params.gamma().to_vec();
    let delta_d: Vec<f64> = params.delta().iter().map(|x| x * d).collect();
    let bounded = MomentLawParams::bounded(0.0, d, n, gamma_d, delta_d)?;
    let m = MomentVector::new(SupportClass::Bounded { a: 0.0, b: d }, point.values().to_vec())?;
    let log = log_density_f(&m, &bounded)?;
    if log == f64::NEG_INFINITY {
        return Err(DistributionError::PointNotInBoundedSpace { scale: d });
    }
    Ok(log.exp())
}

fn bounded_value_realline(point: &MomentVector<f64>, params: &MomentLawParams, s: f64) -> Result<f64> {
    if !(s > 0.0) {
        return Err(DistributionError::InvalidParams("scale must be positive"));
    }
    let len = point.len();
    let mut gamma_s = Vec::with_capacity(len);
    let mut delta_s = Vec::with_capacity(len);
    for j in 1..=len {
        if j % 2 == 1 {
            let d_odd = params.delta()[j - 1] * s * s;
            gamma_s.push(d_odd);
            delta_s.push(d_odd);
        } else {
            gamma_s.push(params.gamma()[j / 2 - 1]);
            delta_s.push(params.delta()[j - 1] * s * s);
        }
    }
    let bounded = MomentLawParams::bounded(-s, s, len, gamma_s, delta_s)?;
    let relabeled = MomentVector::new(SupportClass::Bounded { a: -s, b: s }, point.values().to_vec())?;
    let log = log_density_f(&relabeled, &bounded)?;
    if log == f64::NEG_INFINITY {
        return Err(DistributionError::PointNotInBoundedSpace { scale: s });
    }
    Ok(log.exp())
}
