use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::domain::{sample_params, ParamDomain, ParamTuple, GENERATOR_ID};
use super::identities::{find_identity, Identity, Outcome};

/// |l − r| / max(|l|, |r|, 1e-300).
pub fn rel_err(l: Scalar, r: Scalar) -> f64 {
    (l - r).norm() / l.norm().max(r.norm()).max(1e-300)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub index: usize,
    pub point: ParamTuple,
    /// Absent when an evaluator errored.
    pub rel_err: Option<f64>,
    pub diagnostic: String,
}

/// Outcome of one identity sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_name: String,
    pub samples: usize,
    pub seed: u64,
    pub generator: String,
    pub check_tol: f64,
    pub max_rel_err: f64,
    pub worst_point: Option<ParamTuple>,
    pub failures: Vec<Failure>,
    pub pass: bool,
}

enum SampleResult {
    Compared { rel_err: f64, converged: bool },
    Errored(Error),
}

fn evaluate(identity: &Identity, point: &ParamTuple) -> SampleResult {
    match identity.evaluate(point) {
        Ok((Outcome { value: l, converged: lc }, Outcome { value: r, converged: rc })) => {
            SampleResult::Compared { rel_err: rel_err(l, r), converged: lc && rc }
        }
        Err(e) => SampleResult::Errored(e),
    }
}

fn aggregate(
    identity: &Identity,
    points: Vec<ParamTuple>,
    results: Vec<SampleResult>,
    seed: u64,
    check_tol: f64,
) -> IdentityReport {
    let mut max_rel_err = 0.0f64;
    let mut worst: Option<usize> = None;
    let mut failures = Vec::new();
    for (index, result) in results.into_iter().enumerate() {
        match result {
            SampleResult::Compared { rel_err, converged } => {
                if worst.is_none() || rel_err > max_rel_err {
                    max_rel_err = rel_err;
                    worst = Some(index);
                }
                let diagnostic = if !converged {
                    Some("non-converged".to_string())
                } else if rel_err.is_nan() || rel_err > check_tol {
                    Some("tolerance exceeded".to_string())
                } else {
                    None
                };
                if let Some(diagnostic) = diagnostic {
                    failures.push(Failure { index, point: points[index].clone(), rel_err: Some(rel_err), diagnostic });
                }
            }
            SampleResult::Errored(e) => {
                failures.push(Failure {
                    index,
                    point: points[index].clone(),
                    rel_err: None,
                    diagnostic: e.to_string(),
                });
            }
        }
    }
    let pass = failures.is_empty() && max_rel_err <= check_tol;
    IdentityReport {
        identity_name: identity.name.to_string(),
        samples: points.len(),
        seed,
        generator: GENERATOR_ID.to_string(),
        check_tol,
        max_rel_err,
        worst_point: worst.map(|i| points[i].clone()),
        failures,
        pass,
    }
}

fn lookup(name: &str) -> Result<&'static Identity> {
    find_identity(name).ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Sequential sweep of one identity.
pub fn check_identity(
    name: &str,
    domain: &ParamDomain,
    count: usize,
    seed: u64,
    check_tol: f64,
) -> Result<IdentityReport> {
    let identity = lookup(name)?;
    let points = sample_params(domain, count, seed)?;
    let results = points.iter().map(|p| evaluate(identity, p)).collect();
    Ok(aggregate(identity, points, results, seed, check_tol))
}

/// Parallel sweep on `jobs` worker threads; the report is identical to
/// [`check_identity`] for the same inputs.
pub fn check_identity_par(
    name: &str,
    domain: &ParamDomain,
    count: usize,
    seed: u64,
    check_tol: f64,
    jobs: usize,
) -> Result<IdentityReport> {
    if jobs <= 1 {
        return check_identity(name, domain, count, seed, check_tol);
    }
    let identity = lookup(name)?;
    let points = sample_params(domain, count, seed)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let results = pool.install(|| points.par_iter().map(|p| evaluate(identity, p)).collect());
    Ok(aggregate(identity, points, results, seed, check_tol))
}
