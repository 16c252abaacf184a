use crate::error::{Error, Result};
use crate::scalar::{check_finite, is_finite, real, Scalar, POLE_GUARD};

/// Rising factorial (a)ₙ = a(a+1)⋯(a+n−1), with (a)₀ = 1.
pub fn pochhammer(a: Scalar, n: usize) -> Result<Scalar> {
    check_finite(a, "pochhammer argument")?;
    let mut p = real(1.0);
    for j in 0..n {
        p *= a + j as f64;
        if !is_finite(p) {
            return Err(Error::PochhammerOverflow { a, n });
        }
    }
    Ok(p)
}

/// (a)_{m−n} computed through the shift identity
/// (a)_{m−n} = (−1)ⁿ (a)_m / (1−a−m)_n.
///
/// Fails with [`Error::PochhammerShiftPole`] when a factor of the
/// denominator vanishes; callers then use [`pochhammer`] directly.
pub fn pochhammer_shift(a: Scalar, m: usize, n: usize) -> Result<Scalar> {
    if n > m {
        return Err(Error::InvalidParameter(format!("pochhammer shift needs n <= m (m = {m}, n = {n})")));
    }
    check_finite(a, "pochhammer argument")?;
    let base = real(1.0) - a - m as f64;
    if (0..n).any(|j| (base + j as f64).norm() <= POLE_GUARD) {
        return Err(Error::PochhammerShiftPole { a, m, n });
    }
    let num = pochhammer(a, m)?;
    let den = pochhammer(base, n)?;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    check_finite(sign * num / den, "pochhammer shift").map_err(|_| Error::PochhammerOverflow { a, n: m })
}
