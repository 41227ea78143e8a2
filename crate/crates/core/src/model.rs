//! Potential parameters, channel momenta and energy regions.

// inherent f64 math is std-only
#[allow(unused_imports)]
use num_traits::Float;

use crate::{ComplexScalar, Error, Result};

/// Relative tolerance for deciding that an energy sits on a threshold.
pub const THRESHOLD_TOLERANCE: f64 = 1e-9;

/// `V(x) = a tanh(bx)` acting on a particle of mass `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub a: f64,
    pub b: f64,
    pub m: f64,
}

impl PotentialParams {
    pub fn new(a: f64, b: f64, m: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && m.is_finite()) {
            return Err(Error::InvalidParams("parameters must be finite"));
        }
        if b <= 0.0 {
            return Err(Error::InvalidParams("b must be positive"));
        }
        if m < 0.0 {
            return Err(Error::InvalidParams("m must be non-negative"));
        }
        Ok(Self { a, b, m })
    }

    /// `V(x; -a) = V(-x; a)`: maps a negative height onto a positive one.
    /// Returns the normalized parameters and whether a flip happened.
    pub fn mirrored(self) -> (Self, bool) {
        if self.a < 0.0 {
            (Self { a: -self.a, ..self }, true)
        } else {
            (self, false)
        }
    }

    /// Energies at which one of the channel momenta vanishes.
    pub fn thresholds(&self) -> [f64; 4] {
        let a = self.a.abs();
        [a + self.m, a - self.m, -a + self.m, -a - self.m]
    }
}

pub fn potential_value(params: &PotentialParams, x: f64) -> f64 {
    params.a * (params.b * x).tanh()
}

/// Channel momenta at energy `E`. Plane waves are `exp(±2ibνx)` on the
/// left and `exp(2ibμx)` on the right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dispersion {
    pub nu: ComplexScalar,
    pub mu: ComplexScalar,
    pub lambda: ComplexScalar,
    /// `1 - λ`, kept separately because it cancels badly for large `b`.
    pub lambda_complement: ComplexScalar,
    pub nu_propagating: bool,
    pub mu_propagating: bool,
}

/// Momentum for one channel with kinetic energy `s = E ± a`. Real momenta
/// carry the sign of `s` (positive group velocity); evanescent ones are
/// `+i|.|` so the wave decays away from the potential.
fn channel_momentum(s: f64, m: f64, b: f64) -> (ComplexScalar, bool) {
    let r = s.abs();
    let k2 = (r - m) * (r + m);
    if k2 >= 0.0 {
        let k = k2.sqrt() / (2.0 * b);
        (ComplexScalar::new(if s < 0.0 { -k } else { k }, 0.0), true)
    } else {
        (ComplexScalar::new(0.0, (-k2).sqrt() / (2.0 * b)), false)
    }
}

pub fn dispersion(params: &PotentialParams, energy: f64) -> Dispersion {
    let PotentialParams { a, b, m } = *params;
    let (nu, nu_propagating) = channel_momentum(energy + a, m, b);
    let (mu, mu_propagating) = channel_momentum(energy - a, m, b);
    let disc = b * b - 4.0 * a * a;
    let (lambda, lambda_complement) = if disc >= 0.0 {
        let s = disc.sqrt();
        let lam = (b + s) / (2.0 * b);
        let comp = 2.0 * a * a / (b * (b + s));
        (ComplexScalar::new(lam, 0.0), ComplexScalar::new(comp, 0.0))
    } else {
        let im = (-disc).sqrt() / (2.0 * b);
        (ComplexScalar::new(0.5, im), ComplexScalar::new(0.5, -im))
    };
    Dispersion {
        nu,
        mu,
        lambda,
        lambda_complement,
        nu_propagating,
        mu_propagating,
    }
}

/// Energy regions for `a > m`, highest energy first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnergyRegion {
    /// `E > a + m`: both channels propagate forward.
    FullyPropagating,
    /// `a + m > E > a - m`: transmitted channel evanescent.
    TransmittedEvanescent,
    /// `a - m > E > -a + m`: right momentum negative, `R > 1`.
    Superradiant,
    /// `-a + m > E > -a - m`: incident channel evanescent.
    IncidentEvanescent,
    /// `E < -a - m`: both momenta negative.
    NegativeContinuum,
    /// Both channels closed. Only possible when `a < m`.
    FullyEvanescent,
}

impl EnergyRegion {
    pub fn label(self) -> &'static str {
        match self {
            EnergyRegion::FullyPropagating => "fully_propagating",
            EnergyRegion::TransmittedEvanescent => "transmitted_evanescent",
            EnergyRegion::Superradiant => "superradiant",
            EnergyRegion::IncidentEvanescent => "incident_evanescent",
            EnergyRegion::NegativeContinuum => "negative_continuum",
            EnergyRegion::FullyEvanescent => "fully_evanescent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub region: EnergyRegion,
    /// `E` is within tolerance of a threshold.
    pub boundary: bool,
    /// `a < 0` was mapped onto `-a`; incident and transmitted channels swap.
    pub mirrored: bool,
}

/// Region of `E`, decided from which channel propagates and the sign of
/// its momentum. For `a > m` this reproduces the ordering
/// `E > a+m > a-m > -a+m > -a-m`.
pub fn classify_region(params: &PotentialParams, energy: f64) -> Classification {
    let (norm, mirrored) = params.mirrored();
    let d = dispersion(&norm, energy);
    let region = match (d.nu_propagating, d.mu_propagating) {
        (true, true) => match (d.nu.re < 0.0, d.mu.re < 0.0) {
            (false, false) => EnergyRegion::FullyPropagating,
            (false, true) => EnergyRegion::Superradiant,
            // ν < 0 < μ needs a < 0, excluded after mirroring
            (true, _) => EnergyRegion::NegativeContinuum,
        },
        (true, false) => EnergyRegion::TransmittedEvanescent,
        (false, true) => EnergyRegion::IncidentEvanescent,
        (false, false) => EnergyRegion::FullyEvanescent,
    };
    let tol = THRESHOLD_TOLERANCE * energy.abs().max(1.0);
    let boundary = norm.thresholds().iter().any(|t| (energy - t).abs() <= tol);
    Classification {
        region,
        boundary,
        mirrored,
    }
}
