//! The CLT experiment runner.

use momentforge_asymptotics::{arcsine_moments_unit, mp_moments, semicircle_moments, ScalingMatrix};
use momentforge_distributions::{
    sample_projected_bounded, sample_projected_halfline, sample_projected_realline,
    MomentLawParams, RngStream,
};
use momentforge_ensembles::{spectral_moment_prefix, EnsembleKind, EnsembleSpec};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::standardize::standardize;
use crate::stats::{empirical_cov, ks_normal, max_identity_deviation};
use crate::{Result, StatError};

/// Pass threshold for the per-coordinate KS p-value.
pub const KS_LEVEL: f64 = 0.01;
/// Pass threshold for `max |cov − I|`.
pub const MAX_COV_DEVIATION: f64 = 0.1;

/// What generates the moment samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CltSource {
    /// Moment-space law in its CLT regime: uniform (γ=δ=0) on a bounded
    /// interval, `δ ≡ n` on the half line, `δ = (n, 2n, n, …)` on ℝ.
    BoundedLaw,
    HalfLineLaw,
    RealLineLaw,
    /// Rescaled ensemble spectral measures (Jacobi needs no rescaling).
    Ensemble { kind: EnsembleKind, beta: f64 },
}

impl CltSource {
    pub fn preset_name(&self) -> &'static str {
        match self {
            CltSource::BoundedLaw => "bounded",
            CltSource::HalfLineLaw => "halfline",
            CltSource::RealLineLaw => "realline",
            CltSource::Ensemble { kind, .. } => kind.tag(),
        }
    }
}

/// A fully pinned experiment; equal specs give bit-identical reports.
#[derive(Debug, Clone, PartialEq)]
pub struct CltExperimentSpec {
    pub source: CltSource,
    /// Projection dimension (first k moments).
    pub k: usize,
    /// Space dimension / matrix size.
    pub n: usize,
    /// Monte-Carlo sample count.
    pub samples: usize,
    pub seed: u64,
    /// Negative control: standardize against a deliberately wrong limit
    /// vector; a sound pipeline must then fail decisively.
    pub wrong_centering: bool,
}

impl CltExperimentSpec {
    pub fn new(source: CltSource, k: usize, n: usize, samples: usize, seed: u64) -> Self {
        CltExperimentSpec { source, k, n, samples, seed, wrong_centering: false }
    }

    pub fn with_wrong_centering(mut self) -> Self {
        self.wrong_centering = true;
        self
    }

    fn validate(&self) -> Result<()> {
        let max_k = match self.source {
            CltSource::BoundedLaw | CltSource::HalfLineLaw => self.n,
            CltSource::RealLineLaw | CltSource::Ensemble { .. } => 2 * self.n - 1,
        };
        if self.k == 0 || self.k > max_k {
            return Err(StatError::InvalidExperiment("projection dimension out of range"));
        }
        if self.samples < 100 {
            return Err(StatError::InvalidExperiment("need at least 100 samples"));
        }
        if self.n == 0 {
            return Err(StatError::InvalidExperiment("space dimension must be positive"));
        }
        Ok(())
    }
}

/// Per-coordinate KS verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoordinateVerdict {
    pub coord: usize,
    pub stat: f64,
    pub p: f64,
    pub pass: bool,
}

/// The harness output; serializable for the CLI report file.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CltReport {
    pub preset: String,
    pub k: usize,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub wrong_centering: bool,
    pub ks: Vec<CoordinateVerdict>,
    pub cov: Vec<Vec<f64>>,
    pub max_cov_dev: f64,
    /// Samples whose moment vector left the interior (non-finite or
    /// boundary); always countable, normally zero.
    pub non_interior_samples: usize,
    pub pass: bool,
}

/// Limit vector, scale and matrix for a source, per the moment CLTs.
fn standardization(source: &CltSource, k: usize, n: usize) -> (Vec<f64>, f64, Vec<Vec<f64>>) {
    let nf = n as f64;
    let arcsine = || -> Vec<f64> {
        arcsine_moments_unit(k).iter().map(|r| r.to_f64().unwrap()).collect()
    };
    let mp = || -> Vec<f64> { mp_moments(k).iter().map(|c| c.to_f64().unwrap()).collect() };
    let semi =
        || -> Vec<f64> { semicircle_moments(k).iter().map(|c| c.to_f64().unwrap()).collect() };
    match source {
        CltSource::BoundedLaw => (arcsine(), (8.0 * nf).sqrt(), ScalingMatrix::a(k).to_f64()),
        CltSource::HalfLineLaw => (mp(), nf.sqrt(), ScalingMatrix::c(k).to_f64()),
        CltSource::RealLineLaw => (semi(), (2.0 * nf).sqrt(), ScalingMatrix::d(k).to_f64()),
        CltSource::Ensemble { kind: EnsembleKind::Jacobi, beta } => {
            (arcsine(), (4.0 * beta * nf).sqrt(), ScalingMatrix::a(k).to_f64())
        }
        CltSource::Ensemble { kind: EnsembleKind::Laguerre, beta } => {
            (mp(), (beta * nf / 2.0).sqrt(), ScalingMatrix::c(k).to_f64())
        }
        CltSource::Ensemble { kind: EnsembleKind::Hermite, beta } => {
            (semi(), (beta * nf / 2.0).sqrt(), ScalingMatrix::d(k).to_f64())
        }
    }
}

/// A deliberately wrong centering for the negative control: swap the limit
/// family (semicircle for arcsine/MP sources, Marchenko–Pastur for the
/// symmetric ones).
fn wrong_limit(source: &CltSource, k: usize) -> Vec<f64> {
    let mp = || -> Vec<f64> { mp_moments(k).iter().map(|c| c.to_f64().unwrap()).collect() };
    let semi =
        || -> Vec<f64> { semicircle_moments(k).iter().map(|c| c.to_f64().unwrap()).collect() };
    match source {
        CltSource::BoundedLaw
        | CltSource::HalfLineLaw
        | CltSource::Ensemble { kind: EnsembleKind::Jacobi, .. }
        | CltSource::Ensemble { kind: EnsembleKind::Laguerre, .. } => semi(),
        CltSource::RealLineLaw | CltSource::Ensemble { kind: EnsembleKind::Hermite, .. } => mp(),
    }
}

fn draw(source: &CltSource, k: usize, n: usize, stream: &RngStream) -> Result<Vec<f64>> {
    let mut rng = stream.rng();
    let m = match source {
        CltSource::BoundedLaw => {
            sample_projected_bounded(&MomentLawParams::bounded_clt(n), k, &mut rng)?
        }
        CltSource::HalfLineLaw => {
            sample_projected_halfline(&MomentLawParams::half_line_clt(n), k, &mut rng)?
        }
        CltSource::RealLineLaw => {
            sample_projected_realline(&MomentLawParams::real_line_clt(n), k, &mut rng)?
        }
        CltSource::Ensemble { kind, beta } => {
            let spec = match kind {
                EnsembleKind::Jacobi => EnsembleSpec::jacobi(n, *beta, 0.0, 0.0)?,
                EnsembleKind::Laguerre => EnsembleSpec::laguerre(n, *beta, 0.0)?.rescaled(),
                EnsembleKind::Hermite => EnsembleSpec::hermite(n, *beta)?.rescaled(),
            };
            spectral_moment_prefix(&spec, k, &mut rng)?
        }
    };
    Ok(m)
}

/// Runs the experiment: N independent draws (one RNG stream per sample
/// index, so the result does not depend on thread count), standardization,
/// per-coordinate KS against N(0,1) and empirical covariance against I.
pub fn run_clt(spec: &CltExperimentSpec) -> Result<CltReport> {
    spec.validate()?;
    let (limit, scale, matrix) = standardization(&spec.source, spec.k, spec.n);
    let limit = if spec.wrong_centering { wrong_limit(&spec.source, spec.k) } else { limit };

    let base = RngStream::new(spec.seed);
    let samples: Vec<Result<Vec<f64>>> = (0..spec.samples as u64)
        .into_par_iter()
        .map(|i| draw(&spec.source, spec.k, spec.n, &base.substream(i)))
        .collect();
    let mut rows = Vec::with_capacity(spec.samples);
    let mut non_interior = 0usize;
    for s in samples {
        let v = s?;
        if v.iter().all(|x| x.is_finite()) {
            rows.push(v);
        } else {
            non_interior += 1;
        }
    }

    let standardized = standardize(&rows, &limit, scale, &matrix)?;
    let mut ks = Vec::with_capacity(spec.k);
    for coord in 0..spec.k {
        let column: Vec<f64> = standardized.iter().map(|v| v[coord]).collect();
        let r = ks_normal(&column)?;
        ks.push(CoordinateVerdict {
            coord: coord + 1,
            stat: r.statistic,
            p: r.p_value,
            pass: r.p_value > KS_LEVEL,
        });
    }
    let cov = empirical_cov(&standardized)?;
    let max_cov_dev = max_identity_deviation(&cov);
    let pass = ks.iter().all(|c| c.pass) && max_cov_dev < MAX_COV_DEVIATION && non_interior == 0;
    Ok(CltReport {
        preset: spec.source.preset_name().to_string(),
        k: spec.k,
        n: spec.n,
        samples: spec.samples,
        seed: spec.seed,
        wrong_centering: spec.wrong_centering,
        ks,
        cov,
        max_cov_dev,
        non_interior_samples: non_interior,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        let bad = CltExperimentSpec::new(CltSource::HalfLineLaw, 0, 10, 1000, 1);
        assert!(run_clt(&bad).is_err());
        let bad = CltExperimentSpec::new(CltSource::HalfLineLaw, 11, 10, 1000, 1);
        assert!(run_clt(&bad).is_err());
        let bad = CltExperimentSpec::new(CltSource::HalfLineLaw, 2, 10, 50, 1);
        assert!(run_clt(&bad).is_err());
        // Ensemble sources allow k up to 2n−1.
        let ok = CltExperimentSpec::new(
            CltSource::Ensemble { kind: EnsembleKind::Hermite, beta: 2.0 },
            3,
            2,
            200,
            1,
        );
        assert!(run_clt(&ok).is_ok());
    }

    #[test]
    fn determinism_across_runs() {
        let spec = CltExperimentSpec::new(CltSource::HalfLineLaw, 3, 200, 500, 99);
        let a = run_clt(&spec).unwrap();
        let b = run_clt(&spec).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn determinism_across_thread_counts() {
        let spec = CltExperimentSpec::new(CltSource::RealLineLaw, 3, 200, 400, 7);
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| run_clt(&spec).unwrap());
        let multi = rayon::ThreadPoolBuilder::new()
            .num_threads(8)
            .build()
            .unwrap()
            .install(|| run_clt(&spec).unwrap());
        assert_eq!(single, multi);
    }

    #[test]
    fn small_smoke_run_passes() {
        let spec = CltExperimentSpec::new(CltSource::HalfLineLaw, 2, 2000, 2000, 12345);
        let report = run_clt(&spec).unwrap();
        assert!(report.pass, "report: {report:?}");
        assert_eq!(report.non_interior_samples, 0);
    }

    #[test]
    fn wrong_centering_fails_decisively() {
        let spec =
            CltExperimentSpec::new(CltSource::HalfLineLaw, 2, 2000, 2000, 12345).with_wrong_centering();
        let report = run_clt(&spec).unwrap();
        assert!(!report.pass);
        assert!(report.ks.iter().any(|c| c.p < 1e-6));
    }
}
