//! Complex special functions: principal-branch log-Gamma and the Gauss
//! hypergeometric function on the negative real axis.

mod gamma;
pub mod hyp2f1;

pub use gamma::{is_gamma_pole, ln_gamma_or_pole, log_gamma, POLE_TOLERANCE};
pub use hyp2f1::hyp2f1;
