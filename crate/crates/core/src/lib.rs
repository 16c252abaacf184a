//! Numerical kernels for Humbert's confluent double hypergeometric
//! functions φ₂ and Ψ₂.
//!
//! Each function is available through two independent routes: the defining
//! double series (summed along anti-diagonals) and a single series whose
//! coefficients are terminating Gauss ₂F₁ polynomials. Closed-form reductions
//! for equal and opposite arguments are provided alongside, as well as the
//! Gauss (z = 1) and Kummer (z = −1) summation formulas.
//!
//! The [`verify`] module samples parameter space and compares both sides of
//! every registered identity, producing reproducible [`IdentityReport`]s.
//!
//! ```
//! use hker_core::{humbert, Phi2Params, Scalar, ToleranceSpec};
//!
//! let p = Phi2Params::new(Scalar::new(1.0, 0.0), Scalar::new(1.0, 0.0), Scalar::new(2.0, 0.0)).unwrap();
//! let x = Scalar::new(0.5, 0.0);
//! let v = humbert::phi2_direct(&p, x, x, &ToleranceSpec::default()).unwrap();
//! assert!((v.value.re - 0.5f64.exp()).abs() < 1e-14);
//! ```

pub mod error;
pub mod humbert;
pub mod scalar;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use humbert::{Path, PathValue, Phi2Params, Psi2Params};
pub use scalar::{Scalar, POLE_GUARD};
pub use specfun::{SeriesValue, ToleranceSpec};
pub use verify::{IdentityReport, ParamDomain, ParamTuple};
