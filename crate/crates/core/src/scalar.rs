//! Complex scalar helpers and pole-proximity tests.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Scalar = Complex64;

/// Arguments closer than this to a Γ pole or to a vanishing Pochhammer
/// factor are rejected.
pub const POLE_GUARD: f64 = 1e-8;

#[inline]
pub fn real(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

#[inline]
pub fn is_finite(z: Scalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub fn check_finite(z: Scalar, what: &'static str) -> Result<Scalar> {
    if is_finite(z) {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Nearest integer to `z` if `z` lies within `radius` of it.
pub fn near_integer(z: Scalar, radius: f64) -> Option<i64> {
    let k = z.re.round();
    if (z - real(k)).norm() <= radius {
        Some(k as i64)
    } else {
        None
    }
}

/// Nonpositive integer within `radius` of `z`, if any.
pub fn near_nonpositive_integer(z: Scalar, radius: f64) -> Option<i64> {
    near_integer(z, radius).filter(|&k| k <= 0)
}

/// `true` for the Γ poles 0, −1, −2, … (within [`POLE_GUARD`]).
#[inline]
pub fn is_gamma_pole(z: Scalar) -> bool {
    near_nonpositive_integer(z, POLE_GUARD).is_some()
}

/// Exactly a nonpositive integer, with no tolerance. Used to detect
/// terminating series.
pub fn exact_nonpositive_integer(z: Scalar) -> Option<u64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 && z.re > -(u64::MAX as f64) {
        Some((-z.re) as u64)
    } else {
        None
    }
}
