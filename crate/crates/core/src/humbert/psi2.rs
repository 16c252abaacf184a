use crate::error::{Error, Result};
use crate::scalar::{check_finite, is_finite, real, Scalar};
use crate::specfun::{
    hyp2f1_terminating_with_magnitude, hyp_pfq, CompensatedSum, SeriesValue, StoppingRule, ToleranceSpec,
};

use super::phi2::CANCELLATION_LIMIT;
use super::Psi2Params;

fn not_converged(value: Scalar, terms_used: usize) -> SeriesValue {
    SeriesValue { value, terms_used, est_tail: f64::INFINITY, converged: false }
}

/// Ψ₂ from its defining double series, summed by anti-diagonals.
///
/// Diagonal N contributes (a)_N Σₘ uₘ v_{N−m} with uₘ = xᵐ/((b)ₘ m!) and
/// vₙ = yⁿ/((c)ₙ n!).
pub fn psi2_direct(p: &Psi2Params, x: Scalar, y: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    tol.validate()?;
    check_finite(x, "argument x")?;
    check_finite(y, "argument y")?;
    if x == real(0.0) && y == real(0.0) {
        return Ok(SeriesValue::exact(real(1.0), 1));
    }
    let (a, b, c) = (p.a(), p.b(), p.c());
    let mut u = vec![real(1.0)];
    let mut v = vec![real(1.0)];
    let mut poch_a = real(1.0);
    let mut total = CompensatedSum::new();
    total.add(real(1.0));
    let mut rule = StoppingRule::new(tol);
    for n in 1..tol.max_terms {
        let k = (n - 1) as f64;
        u.push(u[n - 1] * x / ((b + k) * (k + 1.0)));
        v.push(v[n - 1] * y / ((c + k) * (k + 1.0)));
        poch_a *= a + k;
        let diagonal: CompensatedSum = (0..=n).map(|j| u[n - j] * v[j]).collect();
        let d = diagonal.value() * poch_a;
        if !is_finite(d) {
            return Ok(not_converged(total.value(), n));
        }
        total.add(d);
        if rule.observe(d.norm(), total.value().norm()) {
            return Ok(SeriesValue {
                value: total.value(),
                terms_used: n + 1,
                est_tail: rule.est_tail(),
                converged: true,
            });
        }
    }
    Ok(SeriesValue { value: total.value(), terms_used: tol.max_terms, est_tail: rule.est_tail(), converged: false })
}

/// Ψ₂ as Σₙ (a)ₙ/(b)ₙ · ₂F₁(−n, 1−b−n; c; y/x) · xⁿ/n!.
///
/// At x = 0 the limit ₁F₁(a; c; y) is returned.
pub fn psi2_f21_series(p: &Psi2Params, x: Scalar, y: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    tol.validate()?;
    check_finite(x, "argument x")?;
    check_finite(y, "argument y")?;
    let (a, b, c) = (p.a(), p.b(), p.c());
    if x == real(0.0) {
        return hyp_pfq(&[a], &[c], y, tol);
    }
    let ratio = y / x;
    let mut coef = real(1.0);
    let mut total = CompensatedSum::new();
    let mut rule = StoppingRule::new(tol);
    let mut largest = 0.0f64;
    for n in 0..tol.max_terms {
        let nf = n as f64;
        if n > 0 {
            coef *= (a + (nf - 1.0)) * x / ((b + (nf - 1.0)) * nf);
        }
        let (poly, poly_scale) = match hyp2f1_terminating_with_magnitude(n, real(1.0) - b - nf, c, ratio) {
            Ok(r) => r,
            Err(Error::NonFinite(_)) => return Ok(not_converged(total.value(), n)),
            Err(e) => return Err(e),
        };
        let term = coef * poly;
        if !is_finite(term) {
            return Ok(not_converged(total.value(), n));
        }
        largest = largest.max(coef.norm() * poly_scale);
        total.add(term);
        if rule.observe(term.norm(), total.value().norm()) {
            let value = total.value();
            let converged = largest <= CANCELLATION_LIMIT * value.norm().max(tol.abs_tol);
            return Ok(SeriesValue { value, terms_used: n + 1, est_tail: rule.est_tail(), converged });
        }
    }
    Ok(not_converged(total.value(), tol.max_terms))
}

/// [`psi2_f21_series`] with (b, x) and (c, y) exchanged when |y| > |x|.
pub fn psi2_f21_series_oriented(
    p: &Psi2Params,
    x: Scalar,
    y: Scalar,
    tol: &ToleranceSpec,
) -> Result<(SeriesValue, bool)> {
    if y.norm() > x.norm() {
        psi2_f21_series(&p.swapped(), y, x, tol).map(|v| (v, true))
    } else {
        psi2_f21_series(p, x, y, tol).map(|v| (v, false))
    }
}
