use rayon::prelude::*;
use serde::Serialize;

use super::cases::residual;
use super::suite::suite_psd;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::linalg::hermitian_eigvals;

/// Equal-width bins of `lambda_min(R(A)) / tr A` over `[0, 1)`; the ratio
/// never reaches 1 because `tr R(A) = (m-1)(n-1) tr A`.
pub const HISTOGRAM_BINS: usize = 10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanDimsReport {
    pub m: usize,
    pub n: usize,
    pub trials: u64,
    pub min_lambda_min: Option<f64>,
    pub argmin_seed: Option<u64>,
    pub min_normalized: Option<f64>,
    /// Trials with `lambda_min(R(A)) < -tol * max(1, ||R(A)||_F)`.
    pub violations: u64,
    /// Trials with a negative (within tolerance) normalized minimum.
    pub below_zero: u64,
    pub histogram: [u64; HISTOGRAM_BINS],
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub trials: u64,
    pub seed: u64,
    pub tol: f64,
    pub violations: u64,
    pub dims: Vec<ScanDimsReport>,
}

struct Sample {
    lambda_min: f64,
    normalized: f64,
    violated: bool,
}

fn sample(m: usize, n: usize, seed: u64, tol: f64) -> Result<Sample> {
    let Instance::Block(a) = suite_psd(m, n, seed)? else {
        unreachable!("psd generator yields a block matrix")
    };
    let r = residual(&a)?;
    let lambda_min = hermitian_eigvals(&r)?.min();
    let t = a.dense().trace()?.re;
    let normalized = if t > 0.0 { lambda_min / t } else { 0.0 };
    Ok(Sample {
        lambda_min,
        normalized,
        violated: lambda_min < -tol * r.scale(),
    })
}

/// Statistics of `lambda_min(R(A))`, `R(A) = (tr A) I + A - I_m ⊗ tr1 A - (tr2 A) ⊗ I_n`,
/// over seeded PSD instances.
pub fn open_question_scan(
    dims: &[(usize, usize)],
    trials: u64,
    seed: u64,
    tol: f64,
) -> Result<ScanReport> {
    if let Some(&(m, n)) = dims.iter().find(|&&(m, n)| m == 0 || n == 0) {
        return Err(Error::InvalidSpec(format!(
            "dimensions {m}x{n} must be positive"
        )));
    }
    let mut reports = Vec::with_capacity(dims.len());
    for &(m, n) in dims {
        let samples: Vec<Sample> = (0..trials)
            .into_par_iter()
            .map(|t| sample(m, n, seed.wrapping_add(t), tol))
            .collect::<Result<_>>()?;
        let mut rep = ScanDimsReport {
            m,
            n,
            trials,
            min_lambda_min: None,
            argmin_seed: None,
            min_normalized: None,
            violations: 0,
            below_zero: 0,
            histogram: [0; HISTOGRAM_BINS],
        };
        for (t, s) in samples.iter().enumerate() {
            if rep.min_lambda_min.is_none_or(|cur| s.lambda_min < cur) {
                rep.min_lambda_min = Some(s.lambda_min);
                rep.argmin_seed = Some(seed.wrapping_add(t as u64));
            }
            if rep.min_normalized.is_none_or(|cur| s.normalized < cur) {
                rep.min_normalized = Some(s.normalized);
            }
            if s.violated {
                rep.violations += 1;
            }
            if s.normalized < 0.0 {
                rep.below_zero += 1;
            } else {
                let bin = ((s.normalized * HISTOGRAM_BINS as f64) as usize).min(HISTOGRAM_BINS - 1);
                rep.histogram[bin] += 1;
            }
        }
        reports.push(rep);
    }
    Ok(ScanReport {
        trials,
        seed,
        tol,
        violations: reports.iter().map(|r| r.violations).sum(),
        dims: reports,
    })
}
