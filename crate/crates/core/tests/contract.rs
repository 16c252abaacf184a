//! Public-API behaviour at degenerate and boundary inputs.

use hker_core::humbert::{
    phi2_auto, phi2_direct, phi2_f21_series, phi2_f21_series_oriented, phi2_rectangular, psi2_auto, psi2_direct,
    psi2_f21_series,
};
use hker_core::specfun::{gauss_sum_closed, hyp2f1_at_one, hyp_pfq, kummer_sum_closed, pochhammer};
use hker_core::verify::{check_identity, check_identity_par, registry, sample_params};
use hker_core::{Error, Path, Phi2Params, Psi2Params, Scalar, ToleranceSpec, POLE_GUARD};

fn r(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

fn tol() -> ToleranceSpec {
    ToleranceSpec::default()
}

#[test]
fn c_within_guard_of_a_pole_is_rejected() {
    for k in 0..5 {
        let c = -(k as f64);
        for eps in [0.0, 0.5 * POLE_GUARD, -0.9 * POLE_GUARD] {
            let err = Phi2Params::new(r(1.0), r(2.0), r(c + eps)).unwrap_err();
            assert_eq!(err.to_string(), "c at nonpositive integer");
            assert!(Psi2Params::new(r(1.0), r(2.0), r(c + eps)).is_err());
        }
        assert!(Phi2Params::new(r(1.0), r(2.0), r(c + 10.0 * POLE_GUARD)).is_ok());
    }
    // a complex c near the real pole is still a pole
    assert!(Phi2Params::new(r(1.0), r(2.0), Scalar::new(-2.0, 1e-9)).is_err());
    assert!(Phi2Params::new(r(1.0), r(2.0), Scalar::new(-2.0, 1e-3)).is_ok());
}

#[test]
fn psi2_b_is_guarded_too() {
    let err = Psi2Params::new(r(1.0), r(-1.0), r(2.0)).unwrap_err();
    assert_eq!(err.to_string(), "b at nonpositive integer");
}

#[test]
fn origin_is_exactly_one() {
    let p = Phi2Params::new(Scalar::new(0.3, 0.2), r(4.1), r(0.7)).unwrap();
    let q = Psi2Params::new(Scalar::new(0.3, 0.2), r(4.1), r(0.7)).unwrap();
    let z = r(0.0);
    assert_eq!(phi2_direct(&p, z, z, &tol()).unwrap().value, r(1.0));
    assert_eq!(phi2_rectangular(&p, z, z, &tol()).unwrap().value, r(1.0));
    assert_eq!(phi2_f21_series(&p, z, z, &tol()).unwrap().value, r(1.0));
    assert_eq!(phi2_auto(&p, z, z, &tol()).unwrap().series.value, r(1.0));
    assert_eq!(psi2_direct(&q, z, z, &tol()).unwrap().value, r(1.0));
    assert_eq!(psi2_f21_series(&q, z, z, &tol()).unwrap().value, r(1.0));
    assert_eq!(psi2_auto(&q, z, z, &tol()).unwrap().series.value, r(1.0));
}

#[test]
fn zero_argument_collapses_to_1f1() {
    let p = Phi2Params::new(r(0.6), r(1.7), r(2.3)).unwrap();
    for y in [-3.0, 0.4, 2.5] {
        let want = hyp_pfq(&[r(1.7)], &[r(2.3)], r(y), &tol()).unwrap().value;
        assert_eq!(phi2_f21_series(&p, r(0.0), r(y), &tol()).unwrap().value, want);
        let auto = phi2_auto(&p, r(0.0), r(y), &tol()).unwrap();
        assert_eq!(auto.path, Path::Axis);
        let direct = phi2_direct(&p, r(0.0), r(y), &tol()).unwrap().value;
        assert!((direct - want).norm() <= 1e-13 * want.norm());
    }
    let q = Psi2Params::new(r(0.6), r(1.7), r(2.3)).unwrap();
    let want = hyp_pfq(&[r(0.6)], &[r(2.3)], r(0.9), &tol()).unwrap().value;
    assert_eq!(psi2_f21_series(&q, r(0.0), r(0.9), &tol()).unwrap().value, want);
    let want = hyp_pfq(&[r(0.6)], &[r(1.7)], r(0.9), &tol()).unwrap().value;
    assert_eq!(psi2_auto(&q, r(0.9), r(0.0), &tol()).unwrap().series.value, want);
}

#[test]
fn role_swap_handles_larger_y() {
    let p = Phi2Params::new(r(0.4), r(2.2), r(1.9)).unwrap();
    let (v, swapped) = phi2_f21_series_oriented(&p, r(0.3), r(-1.8), &tol()).unwrap();
    assert!(swapped);
    let d = phi2_direct(&p, r(0.3), r(-1.8), &tol()).unwrap().value;
    assert!((v.value - d).norm() <= 1e-12 * d.norm());
}

#[test]
fn closed_form_examples() {
    let g = gauss_sum_closed(r(0.5), r(0.5), r(2.0)).unwrap();
    assert!((g.re - 4.0 / std::f64::consts::PI).abs() < 1e-14);
    let s = hyp2f1_at_one(r(0.5), r(0.5), r(2.0), &tol()).unwrap();
    assert!(s.converged);
    assert!((s.value - g).norm() < 1e-12);
    assert!(matches!(gauss_sum_closed(r(1.0), r(1.0), r(1.5)), Err(Error::GaussDomain(_))));
    // 2F1(a, b; 1+a-b; -1) with b = 1/2, a = 1: Γ(3/2)Γ(3/2)/(Γ(2)Γ(1)) = π/4
    let k = kummer_sum_closed(r(1.0), r(0.5)).unwrap();
    assert!((k.re - std::f64::consts::FRAC_PI_4).abs() < 1e-14);
}

#[test]
fn pochhammer_basics() {
    assert_eq!(pochhammer(r(3.0), 0).unwrap(), r(1.0));
    assert_eq!(pochhammer(r(1.0), 5).unwrap(), r(120.0));
    assert_eq!(pochhammer(r(-2.0), 3).unwrap(), r(0.0));
}

#[test]
fn max_terms_truncation_is_reported() {
    let p = Phi2Params::new(r(0.7), r(1.3), r(2.1)).unwrap();
    let t = ToleranceSpec::default().with_max_terms(4).unwrap();
    let v = phi2_direct(&p, r(1.5), r(-0.4), &t).unwrap();
    assert!(!v.converged);
    assert_eq!(v.terms_used, 4);
    assert!(v.est_tail > 0.0);
}

#[test]
fn registry_sweeps_are_reproducible() {
    assert_eq!(registry().len(), 9);
    for id in registry() {
        let d = id.default_domain();
        let a = check_identity(id.name, &d, 10, 42, id.default_tol).unwrap();
        let b = check_identity_par(id.name, &d, 10, 42, id.default_tol, 3).unwrap();
        assert_eq!(a, b, "{}", id.name);
        assert!(a.pass, "{}: {:?}", id.name, a.failures);
        assert_eq!(sample_params(&d, 10, 42).unwrap(), sample_params(&d, 10, 42).unwrap());
    }
}
