use crate::scalar::Scalar;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pochhammer overflow (a = {a}, n = {n})")]
    PochhammerOverflow { a: Scalar, n: usize },

    #[error("pochhammer shift pole (a = {a}, m = {m}, n = {n})")]
    PochhammerShiftPole { a: Scalar, m: usize, n: usize },

    #[error("gamma pole at nonpositive integer (z = {0})")]
    GammaPole(Scalar),

    #[error("gamma ratio pole")]
    GammaRatioPole,

    #[error("series pole at term {index}")]
    SeriesPole { index: usize },

    #[error("terminating series pole")]
    TerminatingSeriesPole,

    #[error("gauss domain violation: {0}")]
    GaussDomain(&'static str),

    #[error("kummer domain violation: {0}")]
    KummerDomain(&'static str),

    #[error("non-finite {0}")]
    NonFinite(&'static str),

    #[error("{0}")]
    InvalidParameter(String),

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(&'static str),

    #[error("domain too constrained: {0}")]
    DomainTooConstrained(String),

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
}

impl Error {
    /// Stable machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::PochhammerOverflow { .. } => "pochhammer_overflow",
            Error::PochhammerShiftPole { .. } => "pochhammer_shift_pole",
            Error::GammaPole(_) => "gamma_pole",
            Error::GammaRatioPole => "gamma_ratio_pole",
            Error::SeriesPole { .. } => "series_pole",
            Error::TerminatingSeriesPole => "terminating_series_pole",
            Error::GaussDomain(_) => "gauss_domain",
            Error::KummerDomain(_) => "kummer_domain",
            Error::NonFinite(_) => "non_finite",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::InvalidTolerance(_) => "invalid_tolerance",
            Error::DomainTooConstrained(_) => "domain_too_constrained",
            Error::InvalidDomain(_) => "invalid_domain",
            Error::UnknownIdentity(_) => "unknown_identity",
        }
    }
}
