use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{near_integer, near_nonpositive_integer, real, Scalar};

/// Recorded in every report so that a seed can be replayed.
pub const GENERATOR_ID: &str = "chacha8/seed_from_u64";

const MAX_CONSECUTIVE_REJECTIONS: usize = 1000;
const COMPLEX_IMAG_HALF_WIDTH: f64 = 0.5;

/// One sampled parameter point, keyed by parameter name.
pub type ParamTuple = BTreeMap<String, Scalar>;

/// `constant + Σ coefficient · parameter`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Linear {
    pub constant: f64,
    pub terms: Vec<(String, f64)>,
}

impl Linear {
    pub fn param(name: &str) -> Self {
        Linear { constant: 0.0, terms: vec![(name.to_string(), 1.0)] }
    }

    pub fn new(constant: f64, terms: &[(&str, f64)]) -> Self {
        Linear { constant, terms: terms.iter().map(|&(n, c)| (n.to_string(), c)).collect() }
    }

    pub fn eval(&self, point: &ParamTuple) -> Scalar {
        self.terms.iter().fold(real(self.constant), |acc, (name, coef)| acc + point[name] * *coef)
    }
}

/// Rejection rule applied to each candidate point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Guard {
    /// Keep the expression away from 0, −1, −2, … by the exclusion radius.
    NonPositiveInteger(Linear),
    /// Keep the expression away from every integer by the exclusion radius.
    Integer(Linear),
    /// Require Re(expression) ≥ bound.
    AtLeast(Linear, f64),
    /// Require |parameter| ≥ bound.
    AbsAtLeast(String, f64),
}

impl Guard {
    fn admits(&self, point: &ParamTuple, radius: f64) -> bool {
        match self {
            Guard::NonPositiveInteger(e) => near_nonpositive_integer(e.eval(point), radius).is_none(),
            Guard::Integer(e) => near_integer(e.eval(point), radius).is_none(),
            Guard::AtLeast(e, bound) => e.eval(point).re >= *bound,
            Guard::AbsAtLeast(name, bound) => point[name].norm() >= *bound,
        }
    }

    fn names(&self) -> Vec<&str> {
        match self {
            Guard::NonPositiveInteger(e) | Guard::Integer(e) | Guard::AtLeast(e, _) => {
                e.terms.iter().map(|(n, _)| n.as_str()).collect()
            }
            Guard::AbsAtLeast(n, _) => vec![n.as_str()],
        }
    }
}

/// Sampling domain for one identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamDomain {
    /// Real interval per parameter; sampling is uniform on each.
    pub ranges: BTreeMap<String, (f64, f64)>,
    pub exclusion_radius: f64,
    /// When set, the parameters listed in `non_integer` avoid all integers.
    pub integer_avoidance: bool,
    pub non_integer: BTreeSet<String>,
    /// Parameters drawn as integers from their (inclusive) range.
    pub integer_valued: BTreeSet<String>,
    /// Add an imaginary part in [−0.5, 0.5] to every non-integer parameter.
    pub complex: bool,
    pub guards: Vec<Guard>,
}

impl Default for ParamDomain {
    fn default() -> Self {
        ParamDomain {
            ranges: BTreeMap::new(),
            exclusion_radius: 0.05,
            integer_avoidance: true,
            non_integer: BTreeSet::new(),
            integer_valued: BTreeSet::new(),
            complex: false,
            guards: Vec::new(),
        }
    }
}

impl ParamDomain {
    pub fn range(mut self, name: &str, lo: f64, hi: f64) -> Self {
        self.ranges.insert(name.to_string(), (lo, hi));
        self
    }

    pub fn guard(mut self, guard: Guard) -> Self {
        self.guards.push(guard);
        self
    }

    pub fn non_integer(mut self, name: &str) -> Self {
        self.non_integer.insert(name.to_string());
        self
    }

    pub fn integer_valued(mut self, name: &str) -> Self {
        self.integer_valued.insert(name.to_string());
        self
    }

    /// Replace the interval of an existing parameter.
    pub fn override_range(&mut self, name: &str, lo: f64, hi: f64) -> Result<()> {
        if !self.ranges.contains_key(name) {
            return Err(Error::InvalidDomain(format!("no parameter named {name:?}")));
        }
        let mut next = self.clone();
        next.ranges.insert(name.to_string(), (lo, hi));
        next.validate()?;
        *self = next;
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.exclusion_radius >= 0.0 && self.exclusion_radius.is_finite()) {
            return Err(Error::InvalidDomain("exclusion_radius must be nonnegative".into()));
        }
        for (name, &(lo, hi)) in &self.ranges {
            if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                return Err(Error::InvalidDomain(format!("empty or non-finite interval for {name}")));
            }
            if self.integer_valued.contains(name) && lo.ceil() > hi.floor() {
                return Err(Error::InvalidDomain(format!("no integers in the interval for {name}")));
            }
        }
        let known = |n: &str| self.ranges.contains_key(n);
        for name in self.non_integer.iter().chain(&self.integer_valued) {
            if !known(name) {
                return Err(Error::InvalidDomain(format!("no parameter named {name:?}")));
            }
        }
        for g in &self.guards {
            if let Some(n) = g.names().into_iter().find(|n| !known(n)) {
                return Err(Error::InvalidDomain(format!("guard refers to unknown parameter {n:?}")));
            }
        }
        Ok(())
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> ParamTuple {
        let mut point = ParamTuple::new();
        for (name, &(lo, hi)) in &self.ranges {
            let u: f64 = rng.gen();
            let value = if self.integer_valued.contains(name) {
                let (lo, hi) = (lo.ceil(), hi.floor());
                real((lo + (u * (hi - lo + 1.0)).floor()).min(hi))
            } else {
                let re = lo + (hi - lo) * u;
                let im = if self.complex { COMPLEX_IMAG_HALF_WIDTH * (2.0 * rng.gen::<f64>() - 1.0) } else { 0.0 };
                Scalar::new(re, im)
            };
            point.insert(name.clone(), value);
        }
        point
    }

    pub fn admits(&self, point: &ParamTuple) -> bool {
        let r = self.exclusion_radius;
        let integer_ok =
            !self.integer_avoidance || self.non_integer.iter().all(|n| near_integer(point[n], r).is_none());
        integer_ok && self.guards.iter().all(|g| g.admits(point, r))
    }
}

/// Deterministic uniform sampling with rejection of guarded points.
pub fn sample_params(domain: &ParamDomain, count: usize, seed: u64) -> Result<Vec<ParamTuple>> {
    domain.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0;
    while out.len() < count {
        let point = domain.draw(&mut rng);
        if domain.admits(&point) {
            out.push(point);
            rejected = 0;
        } else {
            rejected += 1;
            if rejected >= MAX_CONSECUTIVE_REJECTIONS {
                return Err(Error::DomainTooConstrained(format!(
                    "{MAX_CONSECUTIVE_REJECTIONS} consecutive rejections after {} accepted points",
                    out.len()
                )));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> ParamDomain {
        ParamDomain { integer_avoidance: false, ..Default::default() }
            .range("a", 0.0, 1.0)
            .range("b", 0.0, 1.0)
            .range("c", 0.0, 1.0)
    }

    #[test]
    fn deterministic() {
        assert_eq!(sample_params(&unit(), 5, 42).unwrap(), sample_params(&unit(), 5, 42).unwrap());
        assert_ne!(sample_params(&unit(), 5, 42).unwrap(), sample_params(&unit(), 5, 43).unwrap());
    }

    #[test]
    fn singleton_intervals() {
        let d =
            ParamDomain { integer_avoidance: false, ..Default::default() }.range("a", 1.0, 1.0).range("c", 1.0, 1.0);
        let pts = sample_params(&d, 3, 9).unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().all(|p| p == &pts[0] && p["a"] == real(1.0)));
    }

    #[test]
    fn too_constrained() {
        let d = ParamDomain::default().range("c", -0.04, 0.04).guard(Guard::NonPositiveInteger(Linear::param("c")));
        let err = sample_params(&d, 1, 0).unwrap_err();
        assert!(err.to_string().starts_with("domain too constrained"));
    }

    #[test]
    fn guards_hold_for_every_sample() {
        let d = ParamDomain::default()
            .range("a", -3.0, 3.0)
            .non_integer("a")
            .range("c", -4.0, 4.0)
            .guard(Guard::NonPositiveInteger(Linear::param("c")))
            .guard(Guard::AtLeast(Linear::new(0.0, &[("c", 1.0), ("a", -1.0)]), 0.3));
        for p in sample_params(&d, 500, 1).unwrap() {
            let a = p["a"].re;
            assert!((a - a.round()).abs() > 0.05);
            let c = p["c"].re;
            assert!(c > 0.0 || (c - c.round()).abs() > 0.05);
            assert!(c - a >= 0.3);
        }
    }

    #[test]
    fn integer_parameters() {
        let d = ParamDomain::default()
            .range("m", 0.0, 20.0)
            .range("n", 0.0, 20.0)
            .integer_valued("m")
            .integer_valued("n")
            .guard(Guard::AtLeast(Linear::new(0.0, &[("m", 1.0), ("n", -1.0)]), 0.0));
        let pts = sample_params(&d, 300, 3).unwrap();
        assert!(pts.iter().all(|p| p["m"].re.fract() == 0.0 && p["n"].re <= p["m"].re && p["m"].re <= 20.0));
        assert!(pts.iter().any(|p| p["m"].re == 20.0));
    }

    #[test]
    fn complex_flag() {
        let d = ParamDomain { complex: true, ..unit() };
        let pts = sample_params(&d, 50, 5).unwrap();
        assert!(pts.iter().all(|p| p.values().all(|z| z.im.abs() <= 0.5)));
        assert!(pts.iter().any(|p| p["a"].im != 0.0));
    }

    #[test]
    fn validation() {
        let mut d = unit();
        assert!(d.override_range("a", 2.0, 1.0).is_err());
        assert!(d.override_range("zz", 0.0, 1.0).is_err());
        let d = unit().guard(Guard::AbsAtLeast("q".into(), 1.0));
        assert!(sample_params(&d, 1, 0).is_err());
    }
}
