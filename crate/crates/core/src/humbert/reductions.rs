//! Closed forms of φ₂ on the lines y = x and y = −x.

use crate::error::Result;
use crate::scalar::{real, Scalar};
use crate::specfun::{hyp_pfq, SeriesValue, ToleranceSpec};

use super::guard_denominator;

/// φ₂(a, b; c; x, x) = ₁F₁(a+b; c; x).
pub fn phi2_equal_args(a: Scalar, b: Scalar, c: Scalar, x: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    guard_denominator(c, "c")?;
    hyp_pfq(&[a + b], &[c], x, tol)
}

/// φ₂(a, a; c; x, −x) = ₁F₂(a; c/2, c/2 + 1/2; x²/4).
pub fn phi2_antisym(a: Scalar, c: Scalar, x: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    guard_denominator(c, "c")?;
    let half = c / 2.0;
    guard_denominator(half, "c/2")?;
    guard_denominator(half + 0.5, "c/2+1/2")?;
    hyp_pfq(&[a], &[half, half + 0.5], x * x / 4.0, tol)
}

/// φ₂(a, a; 2a; x, −x) = ₀F₁(; a + 1/2; x²/4).
pub fn phi2_antisym_2a(a: Scalar, x: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    guard_denominator(a * 2.0, "2a")?;
    guard_denominator(a + 0.5, "a+1/2")?;
    hyp_pfq(&[], &[a + real(0.5)], x * x / 4.0, tol)
}
