use crate::error::{Error, Result};
use crate::scalar::{check_finite, is_finite, near_nonpositive_integer, real, Scalar, POLE_GUARD};
use crate::specfun::{
    hyp2f1_terminating_with_magnitude, hyp_pfq, CompensatedSum, SeriesValue, StoppingRule, ToleranceSpec,
};

use super::Phi2Params;

/// The ₂F₁-series route reports non-convergence once its largest
/// contribution exceeds the result by this factor (fewer than ~5 digits
/// would survive the cancellation).
pub const CANCELLATION_LIMIT: f64 = 1e11;

fn not_converged(value: Scalar, terms_used: usize) -> SeriesValue {
    SeriesValue { value, terms_used, est_tail: f64::INFINITY, converged: false }
}

/// φ₂ from its defining double series, summed by anti-diagonals N = n+k.
///
/// The diagonal subtotal is Σₖ uₙ₋ₖ vₖ / (c)_N with uₙ = (a)ₙxⁿ/n! and
/// vₖ = (b)ₖyᵏ/k!. The stopping rule is applied to diagonal subtotals and
/// `max_terms` caps the number of diagonals.
pub fn phi2_direct(p: &Phi2Params, x: Scalar, y: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    tol.validate()?;
    check_finite(x, "argument x")?;
    check_finite(y, "argument y")?;
    if x == real(0.0) && y == real(0.0) {
        return Ok(SeriesValue::exact(real(1.0), 1));
    }
    let (a, b, c) = (p.a(), p.b(), p.c());
    let mut u = vec![real(1.0)];
    let mut v = vec![real(1.0)];
    let mut inv_poch_c = real(1.0);
    let mut total = CompensatedSum::new();
    total.add(real(1.0));
    let mut rule = StoppingRule::new(tol);
    for n in 1..tol.max_terms {
        let k = (n - 1) as f64;
        u.push(u[n - 1] * (a + k) * x / (k + 1.0));
        v.push(v[n - 1] * (b + k) * y / (k + 1.0));
        inv_poch_c /= c + k;
        let diagonal: CompensatedSum = (0..=n).map(|j| u[n - j] * v[j]).collect();
        let d = diagonal.value() * inv_poch_c;
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

/// φ₂ by rows: Σₙ Σₖ T(n, k) with the inner k-series summed to convergence
/// for each n. Used to confirm that the anti-diagonal rearrangement does not
/// change the limit.
pub fn phi2_rectangular(p: &Phi2Params, x: Scalar, y: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    tol.validate()?;
    check_finite(x, "argument x")?;
    check_finite(y, "argument y")?;
    let (a, b, c) = (p.a(), p.b(), p.c());
    let mut total = CompensatedSum::new();
    let mut outer = StoppingRule::new(tol);
    // T(n, 0) = (a)ₙ xⁿ / ((c)ₙ n!)
    let mut head = real(1.0);
    let mut used = 0;
    for n in 0..tol.max_terms {
        let nf = n as f64;
        if n > 0 {
            head *= (a + (nf - 1.0)) * x / ((c + (nf - 1.0)) * nf);
        }
        let mut row = CompensatedSum::new();
        let mut t = head;
        row.add(t);
        let mut inner = StoppingRule::new(tol);
        let mut k = 0usize;
        let mut row_done = t == real(0.0) || y == real(0.0);
        while !row_done {
            if k + 1 >= tol.max_terms {
                return Ok(not_converged(total.value(), used));
            }
            let kf = k as f64;
            t *= (b + kf) * y / ((c + nf + kf) * (kf + 1.0));
            row.add(t);
            k += 1;
            used += 1;
            row_done = inner.observe(t.norm(), row.value().norm());
        }
        let r = row.value();
        if !is_finite(r) {
            return Ok(not_converged(total.value(), used));
        }
        total.add(r);
        used += 1;
        if outer.observe(r.norm(), total.value().norm()) {
            return Ok(SeriesValue {
                value: total.value(),
                terms_used: used,
                est_tail: outer.est_tail(),
                converged: true,
            });
        }
    }
    Ok(not_converged(total.value(), used))
}

/// φ₂ as a series of terminating ₂F₁ polynomials in y/x.
///
/// At x = 0 the representation degenerates and the limit ₁F₁(b; c; y) is
/// returned. A nonpositive-integer `a` makes (1−a−m)ₙ vanish for large
/// enough m and is rejected with [`Error::TerminatingSeriesPole`].
pub fn phi2_f21_series(p: &Phi2Params, x: Scalar, y: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    tol.validate()?;
    check_finite(x, "argument x")?;
    check_finite(y, "argument y")?;
    let (a, b, c) = (p.a(), p.b(), p.c());
    if x == real(0.0) {
        return hyp_pfq(&[b], &[c], y, tol);
    }
    if near_nonpositive_integer(a, POLE_GUARD).is_some() {
        return Err(Error::TerminatingSeriesPole);
    }
    let ratio = y / x;
    // (a)ₘ xᵐ / ((c)ₘ m!)
    let mut coef = real(1.0);
    let mut total = CompensatedSum::new();
    let mut rule = StoppingRule::new(tol);
    let mut largest = 0.0f64;
    for m in 0..tol.max_terms {
        let mf = m as f64;
        if m > 0 {
            coef *= (a + (mf - 1.0)) * x / ((c + (mf - 1.0)) * mf);
        }
        let (poly, poly_scale) = match hyp2f1_terminating_with_magnitude(m, b, real(1.0) - a - mf, ratio) {
            Ok(r) => r,
            Err(Error::NonFinite(_)) => return Ok(not_converged(total.value(), m)),
            Err(e) => return Err(e),
        };
        let term = coef * poly;
        if !is_finite(term) {
            return Ok(not_converged(total.value(), m));
        }
        largest = largest.max(coef.norm() * poly_scale);
        total.add(term);
        if rule.observe(term.norm(), total.value().norm()) {
            let value = total.value();
            let converged = largest <= CANCELLATION_LIMIT * value.norm().max(tol.abs_tol);
            return Ok(SeriesValue { value, terms_used: m + 1, est_tail: rule.est_tail(), converged });
        }
    }
    Ok(not_converged(total.value(), tol.max_terms))
}

/// [`phi2_f21_series`] applied with the roles of (a, x) and (b, y)
/// exchanged whenever |y| > |x|, so that the polynomial argument satisfies
/// |y/x| ≤ 1. The flag reports whether the roles were exchanged.
pub fn phi2_f21_series_oriented(
    p: &Phi2Params,
    x: Scalar,
    y: Scalar,
    tol: &ToleranceSpec,
) -> Result<(SeriesValue, bool)> {
    if y.norm() > x.norm() {
        phi2_f21_series(&p.swapped(), y, x, tol).map(|v| (v, true))
    } else {
        phi2_f21_series(p, x, y, tol).map(|v| (v, false))
    }
}
