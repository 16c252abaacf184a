//! Accelerated summation of Gauss series on the unit circle.
//!
//! At z = 1 the terms of ₂F₁(a, b; c; 1) decay only like n^{a+b−c−1}, so the
//! tail after N terms behaves like N^{−s}(c₀ + c₁/N + …) with s = c−a−b.
//! Richardson extrapolation over N = 8, 16, 32, … with those known exponents
//! removes the tail one power at a time. At z = −1 the series alternates and
//! the Levin u-transform converges in a few dozen terms. Neither route uses
//! Γ functions, which keeps them independent of the closed forms.

use crate::error::{Error, Result};
use crate::scalar::{check_finite, exact_nonpositive_integer, is_finite, is_gamma_pole, real, Scalar};

use super::series::hyp_pfq;
use super::sum::CompensatedSum;
use super::tolerance::{SeriesValue, ToleranceSpec};

/// Accelerated sums cannot certify relative errors below this; a stricter
/// `rel_tol` is raised to it.
pub const ACCEL_REL_FLOOR: f64 = 1e-12;

const RICHARDSON_START: usize = 8;
const RICHARDSON_MAX_LEVELS: usize = 12;
const LEVIN_MAX_ORDER: usize = 40;

/// Diagonal of the Richardson table for partial sums taken at geometrically
/// growing cut-offs N₀, βN₀, β²N₀, …, assuming the error expands in powers
/// N^{−(e₀+i)}, i = 0, 1, …. Entry j combines the first j+1 partial sums.
pub fn richardson_known_exponents(partials: &[Scalar], base: f64, first_exponent: Scalar) -> Vec<Scalar> {
    let mut row: Vec<Scalar> = Vec::with_capacity(partials.len());
    let mut diagonal = Vec::with_capacity(partials.len());
    for &s in partials {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(s);
        for (i, &prev) in row.iter().enumerate() {
            let f = (real(base.ln()) * (first_exponent + i as f64)).exp();
            next.push((f * next[i] - prev) / (f - 1.0));
        }
        diagonal.push(*next.last().expect("row is nonempty"));
        row = next;
    }
    diagonal
}

/// Levin u-transform estimates e₁, e₂, … of Σ tₙ using remainder estimates
/// ωₙ = (n+1) tₙ. Entry k−1 uses the terms t₀..t_k.
pub fn levin_u(terms: &[Scalar]) -> Vec<Scalar> {
    const BETA: f64 = 1.0;
    let partials: Vec<Scalar> = terms
        .iter()
        .scan(CompensatedSum::new(), |acc, &t| {
            acc.add(t);
            Some(acc.value())
        })
        .collect();
    let mut out = Vec::new();
    for k in 1..terms.len() {
        let mut num = CompensatedSum::new();
        let mut den = CompensatedSum::new();
        let mut binom = 1.0f64;
        for j in 0..=k {
            let omega = terms[j] * (BETA + j as f64);
            let w = binom * ((BETA + j as f64) / (BETA + k as f64)).powi(k as i32 - 1);
            let w = if j % 2 == 0 { w } else { -w };
            num.add(partials[j] * w / omega);
            den.add(real(w) / omega);
            binom *= (k - j) as f64 / (j + 1) as f64;
        }
        out.push(num.value() / den.value());
    }
    out
}

fn check_params(a: Scalar, b: Scalar, c: Scalar) -> Result<()> {
    check_finite(a, "series parameter")?;
    check_finite(b, "series parameter")?;
    check_finite(c, "series parameter")?;
    if is_gamma_pole(c) {
        return Err(Error::InvalidParameter("c at nonpositive integer".into()));
    }
    Ok(())
}

fn terminating(a: Scalar, b: Scalar) -> bool {
    exact_nonpositive_integer(a).is_some() || exact_nonpositive_integer(b).is_some()
}

fn floored(tol: &ToleranceSpec) -> ToleranceSpec {
    ToleranceSpec { rel_tol: tol.rel_tol.max(ACCEL_REL_FLOOR), ..*tol }
}

/// ₂F₁(a, b; c; 1) by direct summation with Richardson extrapolation.
/// Requires Re(c−a−b) > 0.
pub fn hyp2f1_at_one(a: Scalar, b: Scalar, c: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    tol.validate()?;
    check_params(a, b, c)?;
    let s = c - (a + b);
    if s.re <= 0.0 {
        return Err(Error::InvalidParameter("2F1 at z = 1 needs Re(c-a-b) > 0".into()));
    }
    if terminating(a, b) {
        return hyp_pfq(&[a, b], &[c], real(1.0), tol);
    }
    let tol = floored(tol);

    let mut partials = Vec::new();
    let mut sum = CompensatedSum::new();
    let mut term = real(1.0);
    let mut n = 0usize;
    let mut cutoff = RICHARDSON_START;
    let mut best: Option<SeriesValue> = None;
    while partials.len() < RICHARDSON_MAX_LEVELS && cutoff <= tol.max_terms {
        while n < cutoff {
            sum.add(term);
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0));
            n += 1;
        }
        if !is_finite(sum.value()) {
            break;
        }
        partials.push(sum.value());
        let diag = richardson_known_exponents(&partials, 2.0, s);
        if diag.len() >= 2 {
            let value = diag[diag.len() - 1];
            let est = (value - diag[diag.len() - 2]).norm();
            let cand = SeriesValue { value, terms_used: n, est_tail: est, converged: est <= tol.bound(value.norm()) };
            // one extra level past the first acceptable one
            if let Some(prev) = best.filter(|b| b.converged) {
                return Ok(if cand.converged { cand } else { prev });
            }
            if best.is_none_or(|b| est < b.est_tail) {
                best = Some(cand);
            }
        }
        cutoff *= 2;
    }
    Ok(best.unwrap_or(SeriesValue { value: sum.value(), terms_used: n, est_tail: f64::INFINITY, converged: false }))
}

/// ₂F₁(a, b; c; −1) by the Levin u-transform of the alternating series.
/// Requires Re(c−a−b) > −1.
pub fn hyp2f1_at_minus_one(a: Scalar, b: Scalar, c: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    tol.validate()?;
    check_params(a, b, c)?;
    if (c - (a + b)).re <= -1.0 {
        return Err(Error::InvalidParameter("2F1 at z = -1 needs Re(c-a-b) > -1".into()));
    }
    if terminating(a, b) {
        return hyp_pfq(&[a, b], &[c], real(-1.0), tol);
    }
    let tol = floored(tol);

    let count = (LEVIN_MAX_ORDER + 1).min(tol.max_terms);
    let mut terms = Vec::with_capacity(count);
    let mut term = real(1.0);
    for n in 0..count {
        if !is_finite(term) || term == real(0.0) {
            break;
        }
        terms.push(term);
        let nf = n as f64;
        term *= -(a + nf) * (b + nf) / ((c + nf) * (nf + 1.0));
    }
    let estimates = levin_u(&terms);
    let mut best: Option<SeriesValue> = None;
    for k in 1..estimates.len() {
        let value = estimates[k];
        let est = (value - estimates[k - 1]).norm();
        if !is_finite(value) || !est.is_finite() {
            continue;
        }
        if best.is_none_or(|b| est < b.est_tail) {
            best = Some(SeriesValue {
                value,
                terms_used: k + 2,
                est_tail: est,
                converged: est <= tol.bound(value.norm()),
            });
        }
    }
    let plain: Scalar = terms.iter().copied().collect::<CompensatedSum>().value();
    Ok(best.unwrap_or(SeriesValue { value: plain, terms_used: terms.len(), est_tail: f64::INFINITY, converged: false }))
}
