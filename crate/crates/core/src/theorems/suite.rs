use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cases::{build_parts, evaluate_parts, SlackReport};
use super::registry::{lookup, registry, CheckKind, InputClass, TheoremCase};
use crate::error::{Error, Result};
use crate::generators::{gen, offdiag_block, GenKind, GenSpec, OffDiagClass};
use crate::instance::Instance;
use crate::order::PSD_TOL;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Case ids to run; empty means the whole registry.
    #[serde(default)]
    pub cases: Vec<String>,
    pub dims: Vec<(usize, usize)>,
    pub trials: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_tol")]
    pub tol: f64,
}

fn default_tol() -> f64 {
    PSD_TOL
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimsAggregate {
    pub m: usize,
    pub n: usize,
    pub trials: u64,
    pub failures: u64,
    pub errors: u64,
    pub premise_misses: u64,
    pub worst_witness: Option<f64>,
    pub worst_seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseAggregate {
    pub id: &'static str,
    pub number: u8,
    pub check_kind: CheckKind,
    pub trials: u64,
    pub failures: u64,
    pub errors: u64,
    pub premise_misses: u64,
    /// The witness closest to failing: the minimum, or for expected-failure
    /// cases the maximum (least pronounced violation).
    pub worst_witness: Option<f64>,
    pub worst_seed: Option<u64>,
    pub by_dims: Vec<DimsAggregate>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub trials: u64,
    pub failures: u64,
    pub cases: Vec<CaseAggregate>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.failures == 0
    }
}

/// The distinct block structures a case runs at for the requested dims.
pub fn suite_dims(case: &TheoremCase, dims: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &(m, n) in dims {
        let d = if case.input_class.forces_two_blocks() {
            (2, n)
        } else {
            (m, n)
        };
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

/// Every fourth seed yields a rank-deficient PSD instance.
fn suite_rank(seed: u64, dim: usize) -> usize {
    if seed % 4 == 3 {
        1 + ((seed / 4) % dim as u64) as usize
    } else {
        dim
    }
}

pub(crate) fn suite_psd(m: usize, n: usize, seed: u64) -> Result<Instance> {
    gen(&GenSpec::new(GenKind::Psd, m, n, seed).with_rank(suite_rank(seed, m * n)))
}

/// The instance the suite checks `case` on at `(m, n)` with `seed`.
pub fn generate_instance(case: &TheoremCase, m: usize, n: usize, seed: u64) -> Result<Instance> {
    let simple = |kind| gen(&GenSpec::new(kind, m, n, seed));
    match case.input_class {
        InputClass::Psd | InputClass::PsdTwoByTwo => suite_psd(m, n, seed),
        InputClass::Ppt => simple(GenKind::Ppt),
        InputClass::Hermitian => simple(GenKind::Hermitian),
        InputClass::GramPair => simple(GenKind::GramPair),
        InputClass::RealInt => simple(GenKind::RealInt),
        InputClass::SquareComplex => simple(GenKind::Ginibre),
        InputClass::MatrixUnitE => simple(GenKind::MatrixUnitE),
        InputClass::DimsOnly => Ok(Instance::Dims { m, n }),
        InputClass::OffDiagHermitian => Ok(Instance::Block(offdiag_block(
            n,
            seed,
            OffDiagClass::Hermitian,
        )?)),
        InputClass::OffDiagSkewHermitian => Ok(Instance::Block(offdiag_block(
            n,
            seed,
            OffDiagClass::SkewHermitian,
        )?)),
    }
}

fn run_trial(case: &TheoremCase, m: usize, n: usize, seed: u64, tol: f64) -> Result<SlackReport> {
    let inst = generate_instance(case, m, n, seed)?;
    let parts = build_parts(case, &inst)?;
    evaluate_parts(case, (m, n), &parts, tol, Some(seed))
}

fn is_worse(kind: CheckKind, candidate: f64, current: Option<f64>) -> bool {
    match current {
        None => true,
        Some(c) if kind == CheckKind::ExpectedFailure => candidate > c,
        Some(c) => candidate < c,
    }
}

fn aggregate_dims(
    kind: CheckKind,
    m: usize,
    n: usize,
    base_seed: u64,
    results: Vec<Result<SlackReport>>,
) -> DimsAggregate {
    let mut d = DimsAggregate {
        m,
        n,
        trials: 0,
        failures: 0,
        errors: 0,
        premise_misses: 0,
        worst_witness: None,
        worst_seed: None,
        first_error: None,
    };
    for (t, result) in results.into_iter().enumerate() {
        let seed = base_seed.wrapping_add(t as u64);
        d.trials += 1;
        match result {
            Ok(r) => {
                if !r.holds {
                    d.failures += 1;
                }
                if r.premise_met == Some(false) {
                    d.premise_misses += 1;
                }
                if let Some(w) = r.witness {
                    if is_worse(kind, w, d.worst_witness) {
                        d.worst_witness = Some(w);
                        d.worst_seed = Some(seed);
                    }
                }
            }
            Err(e) => {
                d.failures += 1;
                d.errors += 1;
                d.first_error.get_or_insert_with(|| e.to_string());
            }
        }
    }
    d
}

fn resolve_cases(ids: &[String]) -> Result<Vec<&'static TheoremCase>> {
    if ids.is_empty() {
        return Ok(registry().iter().collect());
    }
    ids.iter()
        .map(|id| lookup(id).ok_or_else(|| Error::UnknownCase(id.clone())))
        .collect()
}

/// Trial outcomes of one case at one `(m, n)`.
type DimsRuns = ((usize, usize), Vec<Result<SlackReport>>);

/// Runs every requested case over `dims x trials` seeded instances. Results
/// are independent of the thread count.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let cases = resolve_cases(&config.cases)?;
    if let Some(&(m, n)) = config.dims.iter().find(|&&(m, n)| m == 0 || n == 0) {
        return Err(Error::InvalidSpec(format!(
            "dimensions {m}x{n} must be positive"
        )));
    }
    let mut aggregates = Vec::new();
    if config.trials == 0 {
        return Ok(SuiteReport {
            config: config.clone(),
            trials: 0,
            failures: 0,
            cases: aggregates,
        });
    }
    let tasks: Vec<(usize, (usize, usize))> = cases
        .iter()
        .enumerate()
        .flat_map(|(ci, case)| {
            suite_dims(case, &config.dims)
                .into_iter()
                .map(move |d| (ci, d))
        })
        .collect();
    let outcomes: Vec<Vec<Result<SlackReport>>> = tasks
        .par_iter()
        .map(|&(ci, (m, n))| {
            (0..config.trials)
                .into_par_iter()
                .map(|t| run_trial(cases[ci], m, n, config.seed.wrapping_add(t), config.tol))
                .collect()
        })
        .collect();

    let mut per_case: Vec<Vec<DimsRuns>> = (0..cases.len()).map(|_| Vec::new()).collect();
    for (&(ci, d), results) in tasks.iter().zip(outcomes) {
        per_case[ci].push((d, results));
    }

    let mut total_trials = 0;
    let mut total_failures = 0;
    for (case, runs) in cases.iter().zip(per_case) {
        let mut agg = CaseAggregate {
            id: case.id,
            number: case.number,
            check_kind: case.check_kind,
            trials: 0,
            failures: 0,
            errors: 0,
            premise_misses: 0,
            worst_witness: None,
            worst_seed: None,
            by_dims: Vec::new(),
        };
        for ((m, n), results) in runs {
            let d = aggregate_dims(case.check_kind, m, n, config.seed, results);
            agg.trials += d.trials;
            agg.failures += d.failures;
            agg.errors += d.errors;
            agg.premise_misses += d.premise_misses;
            if let Some(w) = d.worst_witness {
                if is_worse(case.check_kind, w, agg.worst_witness) {
                    agg.worst_witness = Some(w);
                    agg.worst_seed = d.worst_seed;
                }
            }
            agg.by_dims.push(d);
        }
        total_trials += agg.trials;
        total_failures += agg.failures;
        aggregates.push(agg);
    }
    Ok(SuiteReport {
        config: config.clone(),
        trials: total_trials,
        failures: total_failures,
        cases: aggregates,
    })
}
