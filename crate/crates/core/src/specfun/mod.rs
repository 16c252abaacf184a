//! Scalar special-function kernel: Γ machinery, Pochhammer symbols and
//! generalized hypergeometric series.

mod accel;
mod closed;
mod gamma;
mod pochhammer;
mod series;
mod sum;
mod tolerance;

pub use accel::{hyp2f1_at_minus_one, hyp2f1_at_one, levin_u, richardson_known_exponents};
pub use closed::{gauss_sum_closed, kummer_sum_closed};
pub use gamma::{gamma_ratio, log_gamma};
pub use pochhammer::{pochhammer, pochhammer_shift};
pub use series::{hyp2f1_terminating, hyp2f1_terminating_with_magnitude, hyp_pfq};
pub use sum::CompensatedSum;
pub use tolerance::{SeriesValue, StoppingRule, ToleranceSpec};
