//! Scattering of a scalar relativistic (Klein-Gordon) particle by the
//! hyperbolic tangent potential `V(x) = a tanh(bx)`.
//!
//! The crate is `no_std` and allocation free. It provides
//!
//! * [`specfun`]: complex log-Gamma and the Gauss hypergeometric function,
//! * [`model`]: potential parameters, channel momenta and energy regions,
//! * [`analytic`]: closed-form amplitudes, reflection/transmission and
//!   wavefunctions,
//! * [`oracle`]: a direct numerical integration of the wave equation plus
//!   the sharp-step limit, used to cross-check the closed form.
//!
//! Units are natural (`hbar = c = 1`). Plane waves on the left and right
//! are written `exp(±2ibνx)` and `exp(2ibμx)`.

#![no_std]

#[cfg(test)]
extern crate std;

pub mod analytic;
pub mod error;
pub mod model;
pub mod oracle;
pub mod specfun;

pub use analytic::{
    amplitudes, current, transport, wavefunction, Amplitudes, Branch, ScatteringSolution,
    Transport, WavefunctionSample,
};
pub use error::{Error, Result};
pub use model::{
    classify_region, dispersion, potential_value, Classification, Dispersion, EnergyRegion,
    PotentialParams,
};
pub use oracle::{integrate_scattering, step_reference, OracleResult};
pub use specfun::{hyp2f1, log_gamma};

/// Complex scalar used for every complex-valued quantity in the crate.
pub type ComplexScalar = num_complex::Complex64;
