use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Truncation and comparison policy for every series evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceSpec {
    pub rel_tol: f64,
    /// Underflow floor added to the relative bound.
    pub abs_tol: f64,
    pub max_terms: usize,
    /// Number of successive negligible terms required before stopping.
    pub consecutive_small: usize,
}

impl Default for ToleranceSpec {
    fn default() -> Self {
        ToleranceSpec { rel_tol: 1e-14, abs_tol: 1e-300, max_terms: 10_000, consecutive_small: 3 }
    }
}

impl ToleranceSpec {
    pub fn new(rel_tol: f64, abs_tol: f64, max_terms: usize, consecutive_small: usize) -> Result<Self> {
        let t = ToleranceSpec { rel_tol, abs_tol, max_terms, consecutive_small };
        t.validate()?;
        Ok(t)
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Result<Self> {
        ToleranceSpec { rel_tol, ..self }.validated()
    }

    pub fn with_max_terms(self, max_terms: usize) -> Result<Self> {
        ToleranceSpec { max_terms, ..self }.validated()
    }

    fn validated(self) -> Result<Self> {
        self.validate().map(|_| self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::InvalidTolerance("rel_tol must be positive and finite"));
        }
        if !(self.abs_tol >= 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::InvalidTolerance("abs_tol must be nonnegative and finite"));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidTolerance("max_terms must be at least 1"));
        }
        if self.consecutive_small == 0 {
            return Err(Error::InvalidTolerance("consecutive_small must be at least 1"));
        }
        Ok(())
    }

    /// Error budget for a result of the given magnitude.
    #[inline]
    pub fn bound(&self, magnitude: f64) -> f64 {
        self.rel_tol * magnitude + self.abs_tol
    }
}

/// Result of a (possibly truncated) series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: Scalar,
    pub terms_used: usize,
    pub est_tail: f64,
    pub converged: bool,
}

impl SeriesValue {
    /// A value with no truncation error (finite sums, closed forms).
    pub fn exact(value: Scalar, terms_used: usize) -> Self {
        SeriesValue { value, terms_used, est_tail: 0.0, converged: true }
    }
}

/// Consecutive-small-terms stopping rule.
///
/// A term counts as small when twice its magnitude fits in the error budget
/// of the current partial sum; the reported tail estimate is the last term
/// magnitude times that safety factor of two, so a converged result always
/// satisfies `est_tail <= rel_tol * |value| + abs_tol`.
#[derive(Debug, Clone)]
pub struct StoppingRule {
    tol: ToleranceSpec,
    run: usize,
    last_term: f64,
}

impl StoppingRule {
    pub const SAFETY: f64 = 2.0;

    pub fn new(tol: &ToleranceSpec) -> Self {
        StoppingRule { tol: *tol, run: 0, last_term: f64::INFINITY }
    }

    /// Record a term; returns `true` once the series may stop.
    pub fn observe(&mut self, term_abs: f64, partial_abs: f64) -> bool {
        self.last_term = term_abs;
        if Self::SAFETY * term_abs <= self.tol.bound(partial_abs) {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run >= self.tol.consecutive_small
    }

    pub fn est_tail(&self) -> f64 {
        Self::SAFETY * self.last_term
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let t = ToleranceSpec::default();
        assert_eq!(t.rel_tol, 1e-14);
        assert_eq!(t.abs_tol, 1e-300);
        assert_eq!(t.max_terms, 10_000);
        assert_eq!(t.consecutive_small, 3);
        assert!(t.validate().is_ok());
    }

    #[test]
    fn rejects_bad_values() {
        assert!(ToleranceSpec::new(0.0, 0.0, 10, 3).is_err());
        assert!(ToleranceSpec::new(1e-10, -1.0, 10, 3).is_err());
        assert!(ToleranceSpec::new(1e-10, 0.0, 0, 3).is_err());
        assert!(ToleranceSpec::new(1e-10, 0.0, 10, 0).is_err());
        assert!(ToleranceSpec::default().with_rel_tol(f64::NAN).is_err());
    }

    #[test]
    fn stopping_rule_needs_a_run() {
        let mut r = StoppingRule::new(&ToleranceSpec::default());
        assert!(!r.observe(0.0, 1.0));
        assert!(!r.observe(0.0, 1.0));
        assert!(!r.observe(1.0, 1.0));
        assert!(!r.observe(0.0, 1.0));
        assert!(!r.observe(0.0, 1.0));
        assert!(r.observe(1e-20, 1.0));
        assert_eq!(r.est_tail(), 2e-20);
    }
}
