use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::{check_finite, near_nonpositive_integer, real, Scalar, POLE_GUARD};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// Lanczos approximation, valid for Re(z) ≥ 1/2.
fn ln_gamma_lanczos(z: Scalar) -> Scalar {
    let z = z - 1.0;
    let mut series = real(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + HALF_LN_TWO_PI + series.ln()
}

/// log Γ(z).
///
/// For Re(z) < 1/2 the reflection formula log π − log sin(πz) − log Γ(1−z)
/// is used; the imaginary part is then only determined modulo 2π, which is
/// all that Γ-ratios need.
pub fn log_gamma(z: Scalar) -> Result<Scalar> {
    check_finite(z, "gamma argument")?;
    if near_nonpositive_integer(z, POLE_GUARD).is_some() {
        return Err(Error::GammaPole(z));
    }
    let out = if z.re >= 0.5 {
        ln_gamma_lanczos(z)
    } else {
        let s = (z * PI).sin();
        real(PI.ln()) - s.ln() - ln_gamma_lanczos(real(1.0) - z)
    };
    check_finite(out, "log gamma")
}

/// Γ(n₁)⋯Γ(n_p) / (Γ(d₁)⋯Γ(d_q)) evaluated in log space.
///
/// A denominator pole makes the ratio vanish. When numerator and denominator
/// carry the same number of poles the ratio of residues is returned, which
/// is the limit along a common perturbation of all pole arguments.
pub fn gamma_ratio(numerators: &[Scalar], denominators: &[Scalar]) -> Result<Scalar> {
    for &z in numerators.iter().chain(denominators) {
        check_finite(z, "gamma ratio argument")?;
    }
    let poles =
        |zs: &[Scalar]| -> Vec<i64> { zs.iter().filter_map(|&z| near_nonpositive_integer(z, POLE_GUARD)).collect() };
    let num_poles = poles(numerators);
    let den_poles = poles(denominators);
    if num_poles.len() > den_poles.len() {
        return Err(Error::GammaRatioPole);
    }
    if num_poles.len() < den_poles.len() {
        return Ok(real(0.0));
    }

    // Γ(−k + ε) ≈ (−1)ᵏ / (k! ε): sign and log k! of each residue.
    let residue = |k: i64| -> (f64, f64) {
        let k = -k;
        let ln_fact = (1..=k).map(|j| (j as f64).ln()).sum::<f64>();
        (if k % 2 == 0 { 1.0 } else { -1.0 }, -ln_fact)
    };
    let mut sign = 1.0;
    let sum_side = |zs: &[Scalar], sign: &mut f64| -> Result<Scalar> {
        let mut acc = real(0.0);
        for &z in zs {
            match near_nonpositive_integer(z, POLE_GUARD) {
                Some(k) => {
                    let (s, l) = residue(k);
                    *sign *= s;
                    acc += l;
                }
                None => acc += log_gamma(z)?,
            }
        }
        Ok(acc)
    };
    let num = sum_side(numerators, &mut sign)?;
    let den = sum_side(denominators, &mut sign)?;
    check_finite((num - den).exp() * sign, "gamma ratio")
}

#[cfg(test)]
#[allow(clippy::excessive_precision, clippy::approx_constant)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(x: Scalar, y: Scalar, rel: f64) -> bool {
        (x - y).norm() <= rel * x.norm().max(y.norm()).max(1e-300)
    }

    #[test]
    fn examples() {
        assert!(log_gamma(real(1.0)).unwrap().norm() < 1e-15);
        assert!((log_gamma(real(0.5)).unwrap() - real(0.5 * PI.ln())).norm() < 1e-15);
        assert!((log_gamma(real(4.0)).unwrap() - real(6f64.ln())).norm() < 1e-14);
        assert!((log_gamma(real(0.5)).unwrap().re - 0.572_364_942_9).abs() < 1e-10);
    }

    #[test]
    fn reference_values() {
        // mpmath.loggamma at 30 digits
        let cases = [
            (real(10.5), real(13.940_625_219_403_763)),
            (real(100.0), real(359.134_205_369_575_4)),
            (real(0.1), real(2.252_712_651_734_206)),
            (Scalar::new(2.0, 3.0), Scalar::new(-2.092_851_753_092_733_3, 2.302_396_543_466_867_6)),
            (Scalar::new(0.7, -0.4), Scalar::new(0.057_044_748_102_824_305, 0.429_440_666_212_295_25)),
        ];
        for (z, want) in cases {
            let got = log_gamma(z).unwrap();
            assert!((got - want).norm() <= 1e-13 * want.norm().max(1.0), "z = {z}: {got} vs {want}");
        }
    }

    #[test]
    fn reflection_gives_signed_gamma() {
        // Γ(−0.5) = −2√π
        let g = log_gamma(real(-0.5)).unwrap().exp();
        assert!(close(g, real(-2.0 * PI.sqrt()), 1e-14));
        // Γ(−2.5) = −8√π/15
        let g = log_gamma(real(-2.5)).unwrap().exp();
        assert!(close(g, real(-8.0 * PI.sqrt() / 15.0), 1e-13));
    }

    #[test]
    fn poles() {
        for z in [0.0, -1.0, -7.0, -3.0 + 1e-9] {
            let err = log_gamma(real(z)).unwrap_err();
            assert!(err.to_string().starts_with("gamma pole at nonpositive integer"));
        }
        assert!(log_gamma(real(-3.0 + 1e-6)).is_ok());
    }

    #[test]
    fn ratio_examples() {
        let r = gamma_ratio(&[real(2.0), real(1.0)], &[real(1.5), real(1.5)]).unwrap();
        assert!(close(r, real(4.0 / PI), 1e-14));
        assert!((r.re - 1.273_239_544_7).abs() < 1e-10);
        let x = Scalar::new(3.7, -1.2);
        assert!(close(gamma_ratio(&[x], &[x]).unwrap(), real(1.0), 1e-15));
        assert_eq!(gamma_ratio(&[real(1.0)], &[real(0.0)]).unwrap(), real(0.0));
        assert_eq!(gamma_ratio(&[real(0.0)], &[real(1.0)]), Err(Error::GammaRatioPole));
        assert!(gamma_ratio(&[real(0.0)], &[real(1.0)]).unwrap_err().to_string().starts_with("gamma ratio pole"));
    }

    #[test]
    fn cancelling_poles_take_residue_limit() {
        // Γ(−2+ε)/Γ(−3+ε) → (1/2!) / (−1/3!) = −3
        let r = gamma_ratio(&[real(-2.0)], &[real(-3.0)]).unwrap();
        assert!(close(r, real(-3.0), 1e-14));
    }

    proptest! {
        #[test]
        fn recurrence(re in 0.1f64..10.0, im in -3.0f64..3.0) {
            let z = Scalar::new(re, im);
            let lhs = log_gamma(z + 1.0).unwrap().exp();
            let rhs = z * log_gamma(z).unwrap().exp();
            prop_assert!(close(lhs, rhs, 1e-12));
        }

        #[test]
        fn reflection_recurrence(re in -6.0f64..0.45, im in -1.0f64..1.0) {
            let z = Scalar::new(re, im);
            prop_assume!(near_nonpositive_integer(z, 1e-3).is_none());
            let lhs = log_gamma(z + 1.0).unwrap().exp();
            let rhs = z * log_gamma(z).unwrap().exp();
            prop_assert!(close(lhs, rhs, 1e-11));
        }
    }
}
