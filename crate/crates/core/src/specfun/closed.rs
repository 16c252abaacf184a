use crate::error::{Error, Result};
use crate::scalar::{check_finite, is_gamma_pole, real, Scalar};

use super::gamma::gamma_ratio;

/// Gauss: ₂F₁(a, b; c; 1) = Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b)), Re(c−a−b) > 0.
pub fn gauss_sum_closed(a: Scalar, b: Scalar, c: Scalar) -> Result<Scalar> {
    check_finite(a, "gauss parameter")?;
    check_finite(b, "gauss parameter")?;
    check_finite(c, "gauss parameter")?;
    // a + b is commutative, so swapping a and b gives bit-identical arguments
    let excess = c - (a + b);
    if excess.re <= 0.0 {
        return Err(Error::GaussDomain("Re(c-a-b) must be positive"));
    }
    if is_gamma_pole(c) {
        return Err(Error::GaussDomain("c at nonpositive integer"));
    }
    gamma_ratio(&[c, excess], &[c - a, c - b])
}

/// Kummer: ₂F₁(a, b; 1+a−b; −1) = Γ(1+a/2)Γ(1+a−b) / (Γ(1+a)Γ(1+a/2−b)).
///
/// Only the numerator Γ's are guarded; a denominator pole gives 0.
pub fn kummer_sum_closed(a: Scalar, b: Scalar) -> Result<Scalar> {
    check_finite(a, "kummer parameter")?;
    check_finite(b, "kummer parameter")?;
    let half = real(1.0) + a / 2.0;
    let c = real(1.0) + a - b;
    if is_gamma_pole(half) || is_gamma_pole(c) {
        return Err(Error::KummerDomain("numerator gamma at a pole"));
    }
    gamma_ratio(&[half, c], &[real(1.0) + a, half - b]).map_err(|_| Error::KummerDomain("numerator gamma at a pole"))
}
