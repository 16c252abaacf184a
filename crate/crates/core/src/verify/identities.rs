use crate::error::Result;
use crate::humbert::{
    phi2_antisym, phi2_antisym_2a, phi2_direct, phi2_equal_args, phi2_f21_series_oriented, phi2_rectangular,
    psi2_direct, psi2_f21_series_oriented, Phi2Params, Psi2Params,
};
use crate::scalar::{real, Scalar};
use crate::specfun::{
    gauss_sum_closed, hyp2f1_at_minus_one, hyp2f1_at_one, kummer_sum_closed, pochhammer, pochhammer_shift, SeriesValue,
    ToleranceSpec,
};

use super::domain::{Guard, Linear, ParamDomain, ParamTuple};

/// One evaluated side of an identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Outcome {
    pub value: Scalar,
    pub converged: bool,
}

impl From<SeriesValue> for Outcome {
    fn from(v: SeriesValue) -> Self {
        Outcome { value: v.value, converged: v.converged }
    }
}

impl Outcome {
    fn exact(value: Scalar) -> Self {
        Outcome { value, converged: true }
    }
}

/// A registered identity: a sampling domain and two independent evaluators.
#[derive(Clone, Copy)]
pub struct Identity {
    pub name: &'static str,
    pub summary: &'static str,
    pub default_samples: usize,
    pub default_tol: f64,
    domain: fn() -> ParamDomain,
    evaluate: fn(&ParamTuple, &ToleranceSpec) -> Result<(Outcome, Outcome)>,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity").field("name", &self.name).finish_non_exhaustive()
    }
}

impl Identity {
    pub fn default_domain(&self) -> ParamDomain {
        (self.domain)()
    }

    /// Left and right sides at one point.
    pub fn evaluate(&self, point: &ParamTuple) -> Result<(Outcome, Outcome)> {
        (self.evaluate)(point, &ToleranceSpec::default())
    }
}

fn get(point: &ParamTuple, name: &str) -> Scalar {
    point[name]
}

fn phi2_params(point: &ParamTuple) -> Result<Phi2Params> {
    Phi2Params::new(get(point, "a"), get(point, "b"), get(point, "c"))
}

fn humbert_domain(xy_bound: f64) -> ParamDomain {
    ParamDomain::default()
        .range("a", 0.1, 3.0)
        .range("b", 0.1, 3.0)
        .range("c", 0.6, 4.0)
        .range("x", -xy_bound, xy_bound)
        .range("y", -xy_bound, xy_bound)
        .non_integer("a")
        .non_integer("b")
        .guard(Guard::NonPositiveInteger(Linear::param("c")))
}

fn theorem1_domain() -> ParamDomain {
    humbert_domain(2.0).guard(Guard::AbsAtLeast("x".into(), 0.05))
}

fn theorem1(point: &ParamTuple, tol: &ToleranceSpec) -> Result<(Outcome, Outcome)> {
    let p = phi2_params(point)?;
    let (x, y) = (get(point, "x"), get(point, "y"));
    let (series, _) = phi2_f21_series_oriented(&p, x, y, tol)?;
    Ok((series.into(), phi2_direct(&p, x, y, tol)?.into()))
}

fn gauss_domain() -> ParamDomain {
    ParamDomain::default()
        .range("a", 0.1, 1.0)
        .range("b", 0.1, 1.0)
        .range("c", 2.5, 4.0)
        .non_integer("a")
        .non_integer("b")
        .guard(Guard::NonPositiveInteger(Linear::param("c")))
        .guard(Guard::AtLeast(Linear::new(0.0, &[("c", 1.0), ("a", -1.0), ("b", -1.0)]), 0.3))
}

fn gauss(point: &ParamTuple, tol: &ToleranceSpec) -> Result<(Outcome, Outcome)> {
    let (a, b, c) = (get(point, "a"), get(point, "b"), get(point, "c"));
    Ok((Outcome::exact(gauss_sum_closed(a, b, c)?), hyp2f1_at_one(a, b, c, tol)?.into()))
}

fn kummer_domain() -> ParamDomain {
    ParamDomain::default()
        .range("a", 0.1, 2.0)
        .range("b", 0.1, 0.4)
        .non_integer("a")
        .guard(Guard::NonPositiveInteger(Linear::new(1.0, &[("a", 0.5)])))
        .guard(Guard::NonPositiveInteger(Linear::new(1.0, &[("a", 1.0), ("b", -1.0)])))
        .guard(Guard::AtLeast(Linear::new(1.0, &[("b", -2.0)]), -0.5))
}

fn kummer(point: &ParamTuple, tol: &ToleranceSpec) -> Result<(Outcome, Outcome)> {
    let (a, b) = (get(point, "a"), get(point, "b"));
    let c = real(1.0) + a - b;
    Ok((Outcome::exact(kummer_sum_closed(a, b)?), hyp2f1_at_minus_one(a, b, c, tol)?.into()))
}

fn equal_args_domain() -> ParamDomain {
    let mut d = humbert_domain(2.0);
    d.ranges.remove("y");
    d
}

fn equal_args(point: &ParamTuple, tol: &ToleranceSpec) -> Result<(Outcome, Outcome)> {
    let p = phi2_params(point)?;
    let x = get(point, "x");
    Ok((phi2_equal_args(p.a(), p.b(), p.c(), x, tol)?.into(), phi2_direct(&p, x, x, tol)?.into()))
}

fn antisym_domain() -> ParamDomain {
    ParamDomain::default()
        .range("a", 0.1, 3.0)
        .range("c", 0.6, 4.0)
        .range("x", -2.0, 2.0)
        .non_integer("a")
        .guard(Guard::NonPositiveInteger(Linear::param("c")))
        .guard(Guard::NonPositiveInteger(Linear::new(0.0, &[("c", 0.5)])))
        .guard(Guard::NonPositiveInteger(Linear::new(0.5, &[("c", 0.5)])))
}

fn antisym(point: &ParamTuple, tol: &ToleranceSpec) -> Result<(Outcome, Outcome)> {
    let (a, c, x) = (get(point, "a"), get(point, "c"), get(point, "x"));
    let p = Phi2Params::new(a, a, c)?;
    Ok((phi2_antisym(a, c, x, tol)?.into(), phi2_direct(&p, x, -x, tol)?.into()))
}

fn antisym_2a_domain() -> ParamDomain {
    ParamDomain::default()
        .range("a", 0.3, 2.0)
        .range("x", -2.0, 2.0)
        .non_integer("a")
        .guard(Guard::NonPositiveInteger(Linear::new(0.0, &[("a", 2.0)])))
        .guard(Guard::NonPositiveInteger(Linear::new(0.5, &[("a", 1.0)])))
}

fn antisym_2a(point: &ParamTuple, tol: &ToleranceSpec) -> Result<(Outcome, Outcome)> {
    let (a, x) = (get(point, "a"), get(point, "x"));
    let p = Phi2Params::new(a, a, a * 2.0)?;
    Ok((phi2_antisym_2a(a, x, tol)?.into(), phi2_direct(&p, x, -x, tol)?.into()))
}

fn psi2_domain() -> ParamDomain {
    ParamDomain::default()
        .range("a", 0.1, 3.0)
        .range("b", 0.6, 4.0)
        .range("c", 0.6, 4.0)
        .range("x", -2.0, 2.0)
        .range("y", -2.0, 2.0)
        .non_integer("a")
        .guard(Guard::NonPositiveInteger(Linear::param("b")))
        .guard(Guard::NonPositiveInteger(Linear::param("c")))
        .guard(Guard::AbsAtLeast("x".into(), 0.05))
}

fn psi2_b(point: &ParamTuple, tol: &ToleranceSpec) -> Result<(Outcome, Outcome)> {
    let p = Psi2Params::new(get(point, "a"), get(point, "b"), get(point, "c"))?;
    let (x, y) = (get(point, "x"), get(point, "y"));
    let (series, _) = psi2_f21_series_oriented(&p, x, y, tol)?;
    Ok((series.into(), psi2_direct(&p, x, y, tol)?.into()))
}

fn poch_shift_domain() -> ParamDomain {
    ParamDomain::default()
        .range("a", -5.0, 5.0)
        .range("m", 0.0, 20.0)
        .range("n", 0.0, 20.0)
        .non_integer("a")
        .integer_valued("m")
        .integer_valued("n")
        .guard(Guard::AtLeast(Linear::new(0.0, &[("m", 1.0), ("n", -1.0)]), 0.0))
}

fn poch_shift(point: &ParamTuple, _tol: &ToleranceSpec) -> Result<(Outcome, Outcome)> {
    let a = get(point, "a");
    let m = get(point, "m").re as usize;
    let n = get(point, "n").re as usize;
    Ok((Outcome::exact(pochhammer_shift(a, m, n)?), Outcome::exact(pochhammer(a, m - n)?)))
}

fn diag_reindex_domain() -> ParamDomain {
    humbert_domain(1.0)
}

fn diag_reindex(point: &ParamTuple, tol: &ToleranceSpec) -> Result<(Outcome, Outcome)> {
    let p = phi2_params(point)?;
    let (x, y) = (get(point, "x"), get(point, "y"));
    Ok((phi2_direct(&p, x, y, tol)?.into(), phi2_rectangular(&p, x, y, tol)?.into()))
}

static REGISTRY: [Identity; 9] = [
    Identity {
        name: "theorem1",
        summary: "phi2 as a series of terminating 2F1 polynomials vs the defining double series",
        default_samples: 100,
        default_tol: 1e-10,
        domain: theorem1_domain,
        evaluate: theorem1,
    },
    Identity {
        name: "gauss",
        summary: "Gauss closed form vs extrapolated 2F1(a,b;c;1) series",
        default_samples: 50,
        default_tol: 1e-8,
        domain: gauss_domain,
        evaluate: gauss,
    },
    Identity {
        name: "kummer",
        summary: "Kummer closed form vs Levin-accelerated 2F1(a,b;1+a-b;-1) series",
        default_samples: 50,
        default_tol: 1e-9,
        domain: kummer_domain,
        evaluate: kummer,
    },
    Identity {
        name: "equal-args",
        summary: "phi2(a,b;c;x,x) = 1F1(a+b;c;x) vs double series",
        default_samples: 50,
        default_tol: 1e-10,
        domain: equal_args_domain,
        evaluate: equal_args,
    },
    Identity {
        name: "antisym",
        summary: "phi2(a,a;c;x,-x) = 1F2(a;c/2,c/2+1/2;x^2/4) vs double series",
        default_samples: 50,
        default_tol: 1e-10,
        domain: antisym_domain,
        evaluate: antisym,
    },
    Identity {
        name: "antisym-2a",
        summary: "phi2(a,a;2a;x,-x) = 0F1(;a+1/2;x^2/4) vs double series",
        default_samples: 50,
        default_tol: 1e-10,
        domain: antisym_2a_domain,
        evaluate: antisym_2a,
    },
    Identity {
        name: "psi2-b",
        summary: "Psi2 as a series of terminating 2F1 polynomials vs the defining double series",
        default_samples: 100,
        default_tol: 1e-10,
        domain: psi2_domain,
        evaluate: psi2_b,
    },
    Identity {
        name: "poch-shift",
        summary: "(a)_{m-n} = (-1)^n (a)_m / (1-a-m)_n vs direct product",
        default_samples: 500,
        default_tol: 1e-12,
        domain: poch_shift_domain,
        evaluate: poch_shift,
    },
    Identity {
        name: "diag-reindex",
        summary: "anti-diagonal vs row-by-row summation of the phi2 double series",
        default_samples: 20,
        default_tol: 1e-12,
        domain: diag_reindex_domain,
        evaluate: diag_reindex,
    },
];

/// All registered identities, in report order.
pub fn registry() -> &'static [Identity] {
    &REGISTRY
}

pub fn find_identity(name: &str) -> Option<&'static Identity> {
    REGISTRY.iter().find(|i| i.name == name)
}
