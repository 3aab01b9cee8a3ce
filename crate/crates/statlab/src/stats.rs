//! Kolmogorov–Smirnov tests and covariance estimation.

use statrs::distribution::{ContinuousCDF, Normal};

use crate::{Result, StatError};

/// Minimum sample count the asymptotic p-values are trusted for.
pub const MIN_SAMPLES: usize = 30;

/// KS statistic and asymptotic p-value.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct KsResult {
    pub statistic: f64,
    pub p_value: f64,
}

/// Survival function of the Kolmogorov distribution,
/// `Q(λ) = 2 Σ_{k≥1} (−1)^{k−1} e^{−2k²λ²}`.
fn kolmogorov_q(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    for k in 1..=100 {
        let term = (-2.0 * (k as f64 * lambda).powi(2)).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-18 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

fn stephens_p(d: f64, effective_n: f64) -> f64 {
    let sq = effective_n.sqrt();
    kolmogorov_q((sq + 0.12 + 0.11 / sq) * d)
}

/// One-sample KS against the standard normal CDF.
pub fn ks_normal(samples: &[f64]) -> Result<KsResult> {
    if samples.len() < MIN_SAMPLES {
        return Err(StatError::TooFewSamples { min: MIN_SAMPLES, got: samples.len() });
    }
    let normal = Normal::new(0.0, 1.0).expect("standard normal");
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut d: f64 = 0.0;
    for (i, x) in xs.iter().enumerate() {
        let f = normal.cdf(*x);
        d = d.max((f - i as f64 / n).abs()).max(((i + 1) as f64 / n - f).abs());
    }
    Ok(KsResult { statistic: d, p_value: stephens_p(d, n) })
}

/// Two-sample KS with the effective sample size `nm/(n+m)`.
pub fn two_sample_ks(x: &[f64], y: &[f64]) -> Result<KsResult> {
    if x.len() < MIN_SAMPLES || y.len() < MIN_SAMPLES {
        return Err(StatError::TooFewSamples { min: MIN_SAMPLES, got: x.len().min(y.len()) });
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    let (n, m) = (xs.len(), ys.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < n && j < m {
        if xs[i] <= ys[j] {
            i += 1;
        } else {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let ne = (n as f64 * m as f64) / (n + m) as f64;
    Ok(KsResult { statistic: d, p_value: stephens_p(d, ne) })
}

/// Unbiased sample covariance of row vectors.
pub fn empirical_cov(vectors: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    if vectors.len() < 2 {
        return Err(StatError::TooFewSamples { min: 2, got: vectors.len() });
    }
    let k = vectors[0].len();
    if vectors.iter().any(|v| v.len() != k) {
        return Err(StatError::DimensionMismatch("ragged sample vectors"));
    }
    let n = vectors.len() as f64;
    let mut mean = vec![0.0; k];
    for v in vectors {
        for (m, x) in mean.iter_mut().zip(v) {
            *m += x;
        }
    }
    for m in &mut mean {
        *m /= n;
    }
    let mut cov = vec![vec![0.0; k]; k];
    for v in vectors {
        for i in 0..k {
            let di = v[i] - mean[i];
            for j in 0..=i {
                cov[i][j] += di * (v[j] - mean[j]);
            }
        }
    }
    for i in 0..k {
        for j in 0..=i {
            cov[i][j] /= n - 1.0;
            cov[j][i] = cov[i][j];
        }
    }
    Ok(cov)
}

/// Largest absolute entry of `cov − I`.
pub fn max_identity_deviation(cov: &[Vec<f64>]) -> f64 {
    let mut dev: f64 = 0.0;
    for (i, row) in cov.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((v - target).abs());
        }
    }
    dev
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn normal_samples_pass_self_test() {
        let mut rng = rand_chacha_rng(1);
        let samples: Vec<f64> = (0..100_000).map(|_| standard_normal(&mut rng)).collect();
        let r = ks_normal(&samples).unwrap();
        assert!(r.p_value > 0.01, "p = {}", r.p_value);
    }

    #[test]
    fn shifted_samples_fail() {
        let mut rng = rand_chacha_rng(2);
        let samples: Vec<f64> = (0..100_000).map(|_| standard_normal(&mut rng) + 0.05).collect();
        let r = ks_normal(&samples).unwrap();
        assert!(r.p_value < 1e-6, "p = {}", r.p_value);
    }

    #[test]
    fn identical_arrays_have_zero_statistic() {
        let x: Vec<f64> = (0..100).map(|i| i as f64).collect();
        let r = two_sample_ks(&x, &x).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert!((r.p_value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn covariance_of_iid_pairs_is_near_identity() {
        let mut rng = rand_chacha_rng(3);
        let n = 20_000;
        let draws: Vec<Vec<f64>> =
            (0..n).map(|_| vec![standard_normal(&mut rng), standard_normal(&mut rng)]).collect();
        let cov = empirical_cov(&draws).unwrap();
        assert!(max_identity_deviation(&cov) < 3.0 / (n as f64).sqrt() * 1.5);
    }

    #[test]
    fn too_few_samples_rejected() {
        assert!(matches!(ks_normal(&[0.0; 5]), Err(StatError::TooFewSamples { .. })));
        assert!(matches!(empirical_cov(&[vec![1.0]]), Err(StatError::TooFewSamples { .. })));
    }

    fn rand_chacha_rng(seed: u64) -> impl Rng {
        momentforge_distributions::RngStream::new(seed).rng()
    }

    fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
        // Box–Muller keeps the dev-dependency list short.
        let u1: f64 = rng.random::<f64>().max(1e-300);
        let u2: f64 = rng.random();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }
}
