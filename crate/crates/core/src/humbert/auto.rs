use crate::error::Result;
use crate::scalar::{real, Scalar};
use crate::specfun::{hyp_pfq, ToleranceSpec};

use super::phi2::{phi2_direct, phi2_f21_series_oriented};
use super::psi2::{psi2_direct, psi2_f21_series_oriented};
use super::reductions::{phi2_antisym, phi2_antisym_2a, phi2_equal_args};
use super::{Path, PathValue, Phi2Params, Psi2Params};

/// φ₂ through the cheapest applicable route.
///
/// Closed forms are only used on exact parameter coincidence (y = x, or
/// b = a with y = −x). Otherwise the ₂F₁-series route runs with the larger
/// argument in front, and the direct double series takes over when that
/// route errors or fails to converge.
pub fn phi2_auto(p: &Phi2Params, x: Scalar, y: Scalar, tol: &ToleranceSpec) -> Result<PathValue> {
    let (a, b, c) = (p.a(), p.b(), p.c());
    if y == x {
        let series = phi2_equal_args(a, b, c, x, tol)?;
        return Ok(PathValue { path: Path::EqualArgs, series });
    }
    if b == a && y == -x {
        if c == a * 2.0 {
            let series = phi2_antisym_2a(a, x, tol)?;
            return Ok(PathValue { path: Path::Antisym2a, series });
        }
        let series = phi2_antisym(a, c, x, tol)?;
        return Ok(PathValue { path: Path::Antisym, series });
    }
    if x == real(0.0) {
        return Ok(PathValue { path: Path::Axis, series: hyp_pfq(&[b], &[c], y, tol)? });
    }
    if y == real(0.0) {
        return Ok(PathValue { path: Path::Axis, series: hyp_pfq(&[a], &[c], x, tol)? });
    }
    match phi2_f21_series_oriented(p, x, y, tol) {
        Ok((series, swapped)) if series.converged => {
            let path = if swapped { Path::F21SeriesSwapped } else { Path::F21Series };
            Ok(PathValue { path, series })
        }
        _ => Ok(PathValue { path: Path::Direct, series: phi2_direct(p, x, y, tol)? }),
    }
}

/// Ψ₂ counterpart of [`phi2_auto`]; only the axis collapse has a closed form.
pub fn psi2_auto(p: &Psi2Params, x: Scalar, y: Scalar, tol: &ToleranceSpec) -> Result<PathValue> {
    let (a, b, c) = (p.a(), p.b(), p.c());
    if x == real(0.0) {
        return Ok(PathValue { path: Path::Axis, series: hyp_pfq(&[a], &[c], y, tol)? });
    }
    if y == real(0.0) {
        return Ok(PathValue { path: Path::Axis, series: hyp_pfq(&[a], &[b], x, tol)? });
    }
    match psi2_f21_series_oriented(p, x, y, tol) {
        Ok((series, swapped)) if series.converged => {
            let path = if swapped { Path::F21SeriesSwapped } else { Path::F21Series };
            Ok(PathValue { path, series })
        }
        _ => Ok(PathValue { path: Path::Direct, series: psi2_direct(p, x, y, tol)? }),
    }
}
