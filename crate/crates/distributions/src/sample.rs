//! Samplers for the three moment-space laws.

use momentforge_core::{
    canonical_to_moments, recurrence_to_moments, skibinsky_forward, CanonicalMoments,
    MomentVector, RecurrenceCoefficients, SkibinskyArray, SupportClass, ZVector,
};
use rand::Rng;
use rand_distr::{Beta, Distribution, Gamma, Normal};

use crate::params::{GeneralWeightFamily, MomentLawParams};
use crate::{DistributionError, Result};

/// Attempts per coordinate before the rejection sampler gives up.
pub const REJECTION_BUDGET: usize = 100_000;

fn beta_draw<R: Rng + ?Sized>(alpha: f64, beta: f64, rng: &mut R) -> Result<f64> {
    let dist = Beta::new(alpha, beta)
        .map_err(|_| DistributionError::InvalidParams("Beta parameters must be positive"))?;
    Ok(dist.sample(rng))
}

fn gamma_draw<R: Rng + ?Sized>(shape: f64, rate: f64, rng: &mut R) -> Result<f64> {
    // rand_distr uses shape–scale; our convention is shape–rate.
    let dist = Gamma::new(shape, 1.0 / rate)
        .map_err(|_| DistributionError::InvalidParams("Gamma parameters must be positive"))?;
    Ok(dist.sample(rng))
}

/// Independent canonical moments of the Beta family:
/// `p_k ~ Beta(γ_k + n−k+1, δ_k + n−k+1)`.
pub fn sample_canonical_bounded<R: Rng + ?Sized>(
    params: &MomentLawParams,
    rng: &mut R,
) -> Result<CanonicalMoments<f64>> {
    let SupportClass::Bounded { a, b } = *params.support() else {
        return Err(DistributionError::InvalidParams("bounded support required"));
    };
    let n = params.dimension();
    let mut p = Vec::with_capacity(n);
    for k in 1..=n {
        let (alpha, beta) = params.beta_parameters(k);
        p.push(beta_draw(alpha, beta, rng)?);
    }
    Ok(CanonicalMoments::new((a, b), p)?)
}

/// General weight family: each `p_k` has density `∝ f_k(x)(x−x²)^{n−k}`,
/// drawn by rejection against the `Beta(n−k+1, n−k+1)` envelope scaled by
/// the user bound on `f_k`.
pub fn sample_canonical_bounded_general<R: Rng + ?Sized>(
    family: &GeneralWeightFamily,
    rng: &mut R,
) -> Result<CanonicalMoments<f64>> {
    let n = family.len();
    let mut p = Vec::with_capacity(n);
    for k in 1..=n {
        let w = family.weight(k);
        let nk = (n - k) as f64;
        let envelope = Beta::new(nk + 1.0, nk + 1.0)
            .map_err(|_| DistributionError::InvalidParams("envelope parameters invalid"))?;
        let mut accepted = None;
        for _ in 0..REJECTION_BUDGET {
            let x = envelope.sample(rng);
            let u: f64 = rng.random();
            if u * w.bound() <= w.eval(x) {
                accepted = Some(x);
                break;
            }
        }
        match accepted {
            Some(x) => p.push(x),
            None => {
                return Err(DistributionError::RejectionBudgetExceeded {
                    index: k,
                    budget: REJECTION_BUDGET,
                })
            }
        }
    }
    Ok(CanonicalMoments::new(family.interval(), p)?)
}

/// Moment vector with density `f_n^{(γ,δ)}` on `M_n([a,b])`.
pub fn sample_moments_bounded<R: Rng + ?Sized>(
    params: &MomentLawParams,
    rng: &mut R,
) -> Result<MomentVector<f64>> {
    let p = sample_canonical_bounded(params, rng)?;
    Ok(canonical_to_moments(&p)?)
}

/// `(z, m)` with density `g_n^{(γ,δ)}` on `M_n([0,∞))`:
/// `z_k ~ Gamma(γ_k+n−k+1, rate δ_k)` independent, `m` via the Skibinsky
/// recursion.
pub fn sample_moments_halfline<R: Rng + ?Sized>(
    params: &MomentLawParams,
    rng: &mut R,
) -> Result<(ZVector<f64>, MomentVector<f64>)> {
    if !matches!(params.support(), SupportClass::HalfLine) {
        return Err(DistributionError::InvalidParams("half-line support required"));
    }
    let n = params.dimension();
    let mut z = Vec::with_capacity(n);
    for k in 1..=n {
        let (shape, rate) = params.gamma_parameters(k);
        z.push(gamma_draw(shape, rate, rng)?);
    }
    let zv = ZVector::new(z)?;
    let m = skibinsky_forward(&zv)?;
    Ok((zv, m))
}

/// `((b, a), m)` with density `h_{2n−1}^{(γ,δ)}` on `M_{2n−1}(ℝ)`:
/// `b_k ~ N(0, 1/(2δ_{2k−1}))`, `a_k ~ Gamma(γ_k+2n−2k, rate δ_{2k})`,
/// all independent; `m` via Jacobi-matrix powers.
pub fn sample_moments_realline<R: Rng + ?Sized>(
    params: &MomentLawParams,
    rng: &mut R,
) -> Result<(RecurrenceCoefficients<f64>, MomentVector<f64>)> {
    if !matches!(params.support(), SupportClass::RealLine) {
        return Err(DistributionError::InvalidParams("real-line support required"));
    }
    let n = params.n();
    let mut b = Vec::with_capacity(n);
    let mut a = Vec::with_capacity(n - 1);
    for k in 1..=n {
        let (var, gamma_ak) = params.real_line_parameters(k);
        let normal = Normal::new(0.0, var.sqrt())
            .map_err(|_| DistributionError::InvalidParams("Normal parameters invalid"))?;
        b.push(normal.sample(rng));
        if let Some((shape, rate)) = gamma_ak {
            a.push(gamma_draw(shape, rate, rng)?);
        }
    }
    let c = RecurrenceCoefficients::new(b, a)?;
    let m = recurrence_to_moments(&c)?;
    Ok((c, m))
}

/// First `k` moments of the bounded law, sampling only `p_1..p_k`.
///
/// `m_j` depends on `p_1..p_j` alone and the `p`'s are independent, so the
/// projection of the full vector and this prefix draw have the same law;
/// the space dimension `n` enters only through the Beta parameters.
pub fn sample_projected_bounded<R: Rng + ?Sized>(
    params: &MomentLawParams,
    k: usize,
    rng: &mut R,
) -> Result<Vec<f64>> {
    let SupportClass::Bounded { a, b } = *params.support() else {
        return Err(DistributionError::InvalidParams("bounded support required"));
    };
    if k == 0 || k > params.dimension() {
        return Err(DistributionError::InvalidParams("projection dimension out of range"));
    }
    let mut p = Vec::with_capacity(k);
    for j in 1..=k {
        let (alpha, beta) = params.beta_parameters(j);
        p.push(beta_draw(alpha, beta, rng)?);
    }
    let pc = CanonicalMoments::new((a, b), p)?;
    Ok(canonical_to_moments(&pc)?.into_values())
}

/// First `k` moments of the half-line law, sampling only `z_1..z_k`.
pub fn sample_projected_halfline<R: Rng + ?Sized>(
    params: &MomentLawParams,
    k: usize,
    rng: &mut R,
) -> Result<Vec<f64>> {
    if !matches!(params.support(), SupportClass::HalfLine) {
        return Err(DistributionError::InvalidParams("half-line support required"));
    }
    if k == 0 || k > params.dimension() {
        return Err(DistributionError::InvalidParams("projection dimension out of range"));
    }
    let mut z = Vec::with_capacity(k);
    for j in 1..=k {
        let (shape, rate) = params.gamma_parameters(j);
        z.push(gamma_draw(shape, rate, rng)?);
    }
    Ok(SkibinskyArray::from_z(&z)?.moments())
}

/// First `k` moments of the real-line law, sampling only the first `k`
/// ξ-coordinates `(b_1, a_1, b_2, …)`.
pub fn sample_projected_realline<R: Rng + ?Sized>(
    params: &MomentLawParams,
    k: usize,
    rng: &mut R,
) -> Result<Vec<f64>> {
    if !matches!(params.support(), SupportClass::RealLine) {
        return Err(DistributionError::InvalidParams("real-line support required"));
    }
    if k == 0 || k > params.dimension() {
        return Err(DistributionError::InvalidParams("projection dimension out of range"));
    }
    let nb = k / 2 + 1;
    let na = k / 2;
    let mut b = Vec::with_capacity(nb);
    let mut a = Vec::with_capacity(na);
    for j in 1..=nb {
        let (var, gamma_aj) = params.real_line_parameters(j);
        let normal = Normal::new(0.0, var.sqrt())
            .map_err(|_| DistributionError::InvalidParams("Normal parameters invalid"))?;
        b.push(normal.sample(rng));
        if j <= na {
            let (shape, rate) =
                gamma_aj.ok_or(DistributionError::InvalidParams("projection needs a_k law"))?;
            a.push(gamma_draw(shape, rate, rng)?);
        }
    }
    let c = RecurrenceCoefficients::new(b, a)?;
    let m = recurrence_to_moments(&c)?;
    Ok(m.into_values()[..k].to_vec())
}
