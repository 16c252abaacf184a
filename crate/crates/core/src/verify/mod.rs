//! Randomized identity verification.
//!
//! Every identity in the [`registry`] pairs two evaluators that share no
//! top-level code path. [`check_identity`] samples a [`ParamDomain`] with a
//! seeded generator, evaluates both sides per sample and aggregates an
//! [`IdentityReport`]. Samples can be evaluated in parallel; aggregation is
//! always in sample order, so reports are identical for any thread count.

mod domain;
mod identities;
mod report;

pub use domain::{sample_params, Guard, Linear, ParamDomain, ParamTuple, GENERATOR_ID};
pub use identities::{find_identity, registry, Identity, Outcome};
pub use report::{check_identity, check_identity_par, rel_err, Failure, IdentityReport};
