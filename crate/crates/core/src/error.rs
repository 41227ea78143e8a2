use core::fmt;

use crate::ComplexScalar;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Argument sits on a pole of the Gamma function.
    Pole(ComplexScalar),
    /// `z -> 1/z` connection formula requested with `p - q` an integer.
    DegenerateTransform { p_minus_q: ComplexScalar },
    /// Hypergeometric series did not converge within the term cap.
    NonConvergence { terms: usize },
    /// Argument outside the contracted domain of a special function.
    Domain(ComplexScalar),
    /// A channel momentum vanishes: the energy sits on a threshold.
    Threshold { energy: f64 },
    /// The incident (left) channel does not propagate.
    Propagation { energy: f64 },
    /// A log-space quantity is too large to exponentiate.
    Range,
    /// The ODE integrator hit its step cap.
    Stiffness { steps: usize },
    /// Invalid potential parameters.
    InvalidParams(&'static str),
    /// A computation produced a NaN or infinity.
    NonFinite,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole(z) => write!(f, "Gamma pole at z = {z}"),
            Error::DegenerateTransform { p_minus_q } => write!(
                f,
                "connection formula is degenerate: p - q = {p_minus_q} is an integer"
            ),
            Error::NonConvergence { terms } => {
                write!(
                    f,
                    "hypergeometric series did not converge after {terms} terms"
                )
            }
            Error::Domain(z) => write!(f, "argument z = {z} outside supported domain"),
            Error::Threshold { energy } => {
                write!(f, "energy E = {energy} is at a channel threshold")
            }
            Error::Propagation { energy } => {
                write!(f, "incident channel is evanescent at E = {energy}")
            }
            Error::Range => write!(f, "amplitude out of floating-point range"),
            Error::Stiffness { steps } => {
                write!(f, "integrator exceeded {steps} steps")
            }
            Error::InvalidParams(msg) => write!(f, "invalid potential parameters: {msg}"),
            Error::NonFinite => write!(f, "non-finite value produced"),
        }
    }
}

impl core::error::Error for Error {}
