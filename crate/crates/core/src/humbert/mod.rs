//! Humbert's confluent double series
//!
//! ```text
//! φ₂(a, b; c; x, y) = Σₙ Σₖ (a)ₙ (b)ₖ / (c)ₙ₊ₖ · xⁿ yᵏ / (n! k!)
//! Ψ₂(a; b, c; x, y) = Σₘ Σₙ (a)ₘ₊ₙ / ((b)ₘ (c)ₙ) · xᵐ yⁿ / (m! n!)
//! ```
//!
//! Both are entire in (x, y). Each is evaluated by the defining double series
//! (summed along anti-diagonals) and by a single series over m whose
//! coefficients are terminating Gauss polynomials
//!
//! ```text
//! φ₂ = Σₘ (a)ₘ/(c)ₘ · ₂F₁(−m, b; 1−a−m; y/x) · xᵐ/m!
//! Ψ₂ = Σₙ (a)ₙ/(b)ₙ · ₂F₁(−n, 1−b−n; c; y/x) · xⁿ/n!
//! ```
//!
//! The Ψ₂ definition above is the standard one from the Humbert catalogue.

mod auto;
mod phi2;
mod psi2;
mod reductions;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{check_finite, is_gamma_pole, Scalar};
use crate::specfun::SeriesValue;

pub use auto::{phi2_auto, psi2_auto};
pub use phi2::{phi2_direct, phi2_f21_series, phi2_f21_series_oriented, phi2_rectangular, CANCELLATION_LIMIT};
pub use psi2::{psi2_direct, psi2_f21_series, psi2_f21_series_oriented};
pub use reductions::{phi2_antisym, phi2_antisym_2a, phi2_equal_args};

fn guard_denominator(z: Scalar, name: &str) -> Result<Scalar> {
    check_finite(z, "parameter")?;
    if is_gamma_pole(z) {
        return Err(Error::InvalidParameter(format!("{name} at nonpositive integer")));
    }
    Ok(z)
}

/// Parameters (a, b; c) of φ₂. `c` must stay away from 0, −1, −2, ….
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Phi2Params {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl Phi2Params {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        check_finite(a, "parameter")?;
        check_finite(b, "parameter")?;
        let c = guard_denominator(c, "c")?;
        Ok(Phi2Params { a, b, c })
    }

    pub fn a(&self) -> Scalar {
        self.a
    }

    pub fn b(&self) -> Scalar {
        self.b
    }

    pub fn c(&self) -> Scalar {
        self.c
    }

    /// φ₂(a, b; c; x, y) = φ₂(b, a; c; y, x).
    pub fn swapped(&self) -> Self {
        Phi2Params { a: self.b, b: self.a, c: self.c }
    }
}

/// Parameters (a; b, c) of Ψ₂. Both `b` and `c` must avoid 0, −1, −2, ….
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Psi2Params {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl Psi2Params {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        check_finite(a, "parameter")?;
        let b = guard_denominator(b, "b")?;
        let c = guard_denominator(c, "c")?;
        Ok(Psi2Params { a, b, c })
    }

    pub fn a(&self) -> Scalar {
        self.a
    }

    pub fn b(&self) -> Scalar {
        self.b
    }

    pub fn c(&self) -> Scalar {
        self.c
    }

    /// Ψ₂(a; b, c; x, y) = Ψ₂(a; c, b; y, x).
    pub fn swapped(&self) -> Self {
        Psi2Params { a: self.a, b: self.c, c: self.b }
    }
}

/// Evaluation route chosen by the dispatchers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Path {
    EqualArgs,
    Antisym,
    #[serde(rename = "antisym-2a")]
    Antisym2a,
    Axis,
    F21Series,
    F21SeriesSwapped,
    Direct,
}

impl Path {
    pub fn as_str(&self) -> &'static str {
        match self {
            Path::EqualArgs => "equal-args",
            Path::Antisym => "antisym",
            Path::Antisym2a => "antisym-2a",
            Path::Axis => "axis",
            Path::F21Series => "f21-series",
            Path::F21SeriesSwapped => "f21-series-swapped",
            Path::Direct => "direct",
        }
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A series value tagged with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathValue {
    pub path: Path,
    pub series: SeriesValue,
}
