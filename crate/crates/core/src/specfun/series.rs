use crate::error::{Error, Result};
use crate::scalar::{check_finite, exact_nonpositive_integer, is_finite, real, Scalar, POLE_GUARD};

use super::sum::CompensatedSum;
use super::tolerance::{SeriesValue, StoppingRule, ToleranceSpec};

/// Generalized hypergeometric series ₚF_q(num; den; z) by partial sums.
///
/// Terms follow tₙ₊₁ = tₙ · ∏(numᵢ+n) / ∏(denⱼ+n) · z/(n+1). A numerator
/// parameter that is exactly a nonpositive integer terminates the series;
/// a denominator parameter reaching a pole before that is an error.
/// Running out of `max_terms`, or terms overflowing, yields
/// `converged = false` rather than an error.
pub fn hyp_pfq(num: &[Scalar], den: &[Scalar], z: Scalar, tol: &ToleranceSpec) -> Result<SeriesValue> {
    tol.validate()?;
    for &p in num.iter().chain(den) {
        check_finite(p, "series parameter")?;
    }
    check_finite(z, "series argument")?;
    if z == real(0.0) {
        return Ok(SeriesValue::exact(real(1.0), 1));
    }

    let terminates_at: Option<u64> = num.iter().filter_map(|&p| exact_nonpositive_integer(p)).min();
    let mut sum = CompensatedSum::new();
    let mut term = real(1.0);
    sum.add(term);
    let mut rule = StoppingRule::new(tol);
    let mut n = 0usize;
    loop {
        if terminates_at == Some(n as u64) {
            return Ok(SeriesValue::exact(sum.value(), n + 1));
        }
        if n + 1 >= tol.max_terms {
            return Ok(SeriesValue {
                value: sum.value(),
                terms_used: n + 1,
                est_tail: rule.est_tail(),
                converged: false,
            });
        }
        let nf = n as f64;
        let mut ratio = z / (nf + 1.0);
        for &p in num {
            ratio *= p + nf;
        }
        for &q in den {
            let d = q + nf;
            if d.norm() <= POLE_GUARD {
                return Err(Error::SeriesPole { index: n + 1 });
            }
            ratio /= d;
        }
        term *= ratio;
        n += 1;
        if !is_finite(term) {
            return Ok(SeriesValue { value: sum.value(), terms_used: n, est_tail: f64::INFINITY, converged: false });
        }
        sum.add(term);
        if rule.observe(term.norm(), sum.value().norm()) {
            return Ok(SeriesValue {
                value: sum.value(),
                terms_used: n + 1,
                est_tail: rule.est_tail(),
                converged: true,
            });
        }
    }
}

/// ₂F₁(−m, b; c; z) as the exact degree-m polynomial.
pub fn hyp2f1_terminating(m: usize, b: Scalar, c: Scalar, z: Scalar) -> Result<Scalar> {
    hyp2f1_terminating_with_magnitude(m, b, c, z).map(|(v, _)| v)
}

/// Like [`hyp2f1_terminating`], also returning the largest term magnitude,
/// from which callers can judge cancellation.
pub fn hyp2f1_terminating_with_magnitude(m: usize, b: Scalar, c: Scalar, z: Scalar) -> Result<(Scalar, f64)> {
    check_finite(b, "series parameter")?;
    check_finite(c, "series parameter")?;
    check_finite(z, "series argument")?;
    if (0..m).any(|j| (c + j as f64).norm() <= POLE_GUARD) {
        return Err(Error::TerminatingSeriesPole);
    }
    let mf = m as f64;
    let mut sum = CompensatedSum::new();
    let mut term = real(1.0);
    let mut largest = 1.0f64;
    sum.add(term);
    for n in 0..m {
        let nf = n as f64;
        // same factor order as hyp_pfq
        let ratio = z / (nf + 1.0) * (nf - mf) * (b + nf) / (c + nf);
        term *= ratio;
        largest = largest.max(term.norm());
        sum.add(term);
    }
    let v = check_finite(sum.value(), "terminating series")?;
    Ok((v, largest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::pochhammer;
    use proptest::prelude::*;

    fn close(x: Scalar, y: Scalar, rel: f64) -> bool {
        (x - y).norm() <= rel * x.norm().max(y.norm()).max(1e-300)
    }

    fn tol() -> ToleranceSpec {
        ToleranceSpec::default()
    }

    #[test]
    fn confluent_with_equal_params_is_exp() {
        let v = hyp_pfq(&[real(2.0)], &[real(2.0)], real(0.5), &tol()).unwrap();
        assert!(v.converged);
        assert!(close(v.value, real(0.5f64.exp()), 1e-15));
        assert!((v.value.re - 1.648_721_270_7).abs() < 1e-10);
        assert!(v.est_tail <= tol().bound(v.value.norm()));
    }

    #[test]
    fn zero_f_one_half_is_cosh() {
        // ₀F₁(;1/2;z) = cosh(2√z); brute-force partial sums as oracle
        let mut brute = 0.0f64;
        let mut t = 1.0f64;
        for n in 0..40 {
            brute += t;
            t *= 1.0 / ((0.5 + n as f64) * (n as f64 + 1.0));
        }
        assert!((brute - 2f64.cosh()).abs() < 1e-15);
        let v = hyp_pfq(&[], &[real(0.5)], real(1.0), &tol()).unwrap();
        assert!(close(v.value, real(2f64.cosh()), 1e-15));
        assert!((v.value.re - 3.762_195_691_1).abs() < 1e-10);
    }

    #[test]
    fn zero_argument() {
        let v = hyp_pfq(&[real(3.0), real(-0.5)], &[real(0.0)], real(0.0), &tol()).unwrap();
        assert_eq!(v, SeriesValue::exact(real(1.0), 1));
    }

    #[test]
    fn denominator_pole() {
        let err = hyp_pfq(&[real(1.0)], &[real(-2.0)], real(0.5), &tol()).unwrap_err();
        assert_eq!(err, Error::SeriesPole { index: 3 });
        assert!(err.to_string().starts_with("series pole"));
    }

    #[test]
    fn termination_precedes_pole() {
        // ₂F₁(−2, 1; −5; z): terminates before (−5)ₙ vanishes
        let v = hyp_pfq(&[real(-2.0), real(1.0)], &[real(-5.0)], real(0.5), &tol()).unwrap();
        let want = 1.0 + (-2.0 / -5.0) * 0.5 + (-2.0 * -1.0 * 1.0 * 2.0) / (-5.0 * -4.0 * 2.0) * 0.25;
        assert!(v.converged);
        assert_eq!(v.est_tail, 0.0);
        assert_eq!(v.terms_used, 3);
        assert!(close(v.value, real(want), 1e-15));
    }

    #[test]
    fn non_convergence_is_a_flag() {
        let t = ToleranceSpec::default().with_max_terms(5).unwrap();
        let v = hyp_pfq(&[real(1.0)], &[real(1.0)], real(10.0), &t).unwrap();
        assert!(!v.converged);
        assert!(v.terms_used <= 5);
        // divergent ₂F₁ outside the disc
        let v = hyp_pfq(&[real(1.0), real(1.0)], &[real(1.0)], real(2.0), &tol()).unwrap();
        assert!(!v.converged);
        assert!(v.terms_used <= tol().max_terms);
    }

    #[test]
    fn terminating_examples() {
        let any = Scalar::new(0.3, -2.0);
        assert_eq!(hyp2f1_terminating(0, any, any, any).unwrap(), real(1.0));
        assert!(close(hyp2f1_terminating(1, real(2.0), real(3.0), real(0.5)).unwrap(), real(2.0 / 3.0), 1e-15));
    }

    #[test]
    fn terminating_matches_brute_force() {
        let (m, b, c, z) = (4usize, real(0.7), real(-3.2), real(0.6));
        let fact = |k: usize| (1..=k).map(|j| j as f64).product::<f64>();
        let brute: Scalar = (0..=m)
            .map(|n| {
                pochhammer(real(-(m as f64)), n).unwrap() * pochhammer(b, n).unwrap() / pochhammer(c, n).unwrap()
                    * z.powu(n as u32)
                    / fact(n)
            })
            .sum();
        let got = hyp2f1_terminating(m, b, c, z).unwrap();
        assert!(close(got, brute, 1e-14), "{got} vs {brute}");
    }

    #[test]
    fn terminating_pole() {
        assert_eq!(hyp2f1_terminating(3, real(1.0), real(-2.0), real(0.5)), Err(Error::TerminatingSeriesPole));
        assert!(hyp2f1_terminating(2, real(1.0), real(-2.0), real(0.5)).is_ok());
    }

    proptest! {
        #[test]
        fn generic_engine_agrees_with_polynomial(
            m in 0usize..25, b in -3.0f64..3.0, c in 0.2f64..5.0, zr in -1.5f64..1.5, zi in -0.5f64..0.5,
        ) {
            let z = Scalar::new(zr, zi);
            let poly = hyp2f1_terminating(m, real(b), real(c), z).unwrap();
            let series = hyp_pfq(&[real(-(m as f64)), real(b)], &[real(c)], z, &tol()).unwrap();
            prop_assert!(series.converged);
            let (_, largest) = hyp2f1_terminating_with_magnitude(m, real(b), real(c), z).unwrap();
            // cancellation-aware bound: relative to the value, floored by the term scale
            let scale = poly.norm().max(largest * 1e-3);
            prop_assert!((series.value - poly).norm() <= 1e-13 * scale, "{} vs {}", series.value, poly);
        }
    }
}
