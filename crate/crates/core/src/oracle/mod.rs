//! Direct numerical solution of `φ'' + [(E - a tanh(bx))² - m²] φ = 0`.
//!
//! Integration starts far on the right from the unit transmitted wave and
//! runs leftwards; at the left edge the solution is split into the two
//! plane waves `A e^(2ibνx) + B e^(-2ibνx)`.

mod dopri;

pub use dopri::{Dopri5, IntegrationStats, MAX_STEPS};

// inherent f64 math is std-only
#[allow(unused_imports)]
use num_traits::Float;

use crate::analytic::Transport;
use crate::model::{classify_region, dispersion, PotentialParams};
use crate::{ComplexScalar, Error, Result};

const I: ComplexScalar = ComplexScalar::new(0.0, 1.0);

/// Local error tolerance handed to the stepper, relative to the requested
/// accuracy. Global error grows roughly linearly with the step count, and
/// this keeps it below `tol` for the windows used here.
pub const LOCAL_TOL_FACTOR: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub r: f64,
    pub t: f64,
    pub a: ComplexScalar,
    pub b: ComplexScalar,
    /// Accumulated local error estimate over the run (relative).
    pub est_error: f64,
    /// Half-width `L` of the integration window `[-L, L]`.
    pub window: f64,
    pub steps: usize,
}

/// Window half-width: far enough that `e^(-2bL) < 1e-13` and long enough
/// to hold several wavelengths of the slower channel.
pub fn default_window(params: &PotentialParams, energy: f64) -> f64 {
    let d = dispersion(params, energy);
    let kmin = d.nu.re.abs().min(d.mu.re.abs());
    (15.0 / params.b).max(8.0 / (2.0 * params.b * kmin))
}

pub fn integrate_scattering(
    params: &PotentialParams,
    energy: f64,
    tol: f64,
) -> Result<OracleResult> {
    let window = default_window(params, energy);
    integrate_with_window(params, energy, tol, window)
}

pub fn integrate_with_window(
    params: &PotentialParams,
    energy: f64,
    tol: f64,
    window: f64,
) -> Result<OracleResult> {
    let region = classify_region(params, energy);
    if region.boundary {
        return Err(Error::Threshold { energy });
    }
    let d = dispersion(params, energy);
    if !d.nu_propagating || !d.mu_propagating {
        return Err(Error::Propagation { energy });
    }
    let PotentialParams { a, b, m } = *params;
    let (k_left, k_right) = (2.0 * b * d.nu.re, 2.0 * b * d.mu.re);

    let start = (I * k_right * window).exp();
    let y0 = [start, I * k_right * start];
    let rhs = |x: f64, y: &[ComplexScalar; 2]| {
        let kin = energy - a * (b * x).tanh();
        [y[1], -(kin * kin - m * m) * y[0]]
    };
    let local = tol * LOCAL_TOL_FACTOR;
    let solver = Dopri5::new(local, local);
    let (y, stats) = solver.integrate(rhs, window, -window, y0)?;

    let x = -window;
    let plus = (I * k_left * x).exp();
    let minus = (-I * k_left * x).exp();
    let slope = y[1] / (I * k_left);
    let amp_a = 0.5 * (y[0] + slope) / plus;
    let amp_b = 0.5 * (y[0] - slope) / minus;

    Ok(OracleResult {
        r: (amp_b / amp_a).norm_sqr(),
        t: (d.mu.re / d.nu.re) / amp_a.norm_sqr(),
        a: amp_a,
        b: amp_b,
        est_error: stats.error_sum,
        window,
        steps: stats.accepted + stats.rejected,
    })
}

/// Sharp step `V = ±a` (the `b -> ∞` limit). Only ratios of momenta enter.
pub fn step_reference(params: &PotentialParams, energy: f64) -> Result<Transport> {
    let region = classify_region(params, energy);
    if region.boundary {
        return Err(Error::Threshold { energy });
    }
    let d = dispersion(params, energy);
    if !d.nu_propagating || !d.mu_propagating {
        return Err(Error::Propagation { energy });
    }
    let (nu, mu) = (d.nu.re, d.mu.re);
    let sum = nu + mu;
    if sum.abs() <= f64::EPSILON * (nu.abs() + mu.abs()) {
        // Klein-step resonance at ν = -μ
        return Err(Error::Range);
    }
    let r = ((nu - mu) / sum).powi(2);
    let t = (mu / nu) * (2.0 * nu / sum).powi(2);
    Ok(Transport {
        r,
        t,
        region,
        superradiant: t < 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, m: f64) -> PotentialParams {
        PotentialParams::new(a, b, m).unwrap()
    }

    #[test]
    fn free_particle() {
        let o = integrate_scattering(&p(0.0, 1.0, 1.0), 2.0, 1e-10).unwrap();
        assert!(o.r <= 1e-10);
        assert!((o.t - 1.0).abs() <= 1e-10, "{o:?}");
    }

    #[test]
    fn superradiant_run() {
        let o = integrate_scattering(&p(5.0, 2.0, 1.0), 2.0, 1e-10).unwrap();
        assert!(o.r > 1.0 && o.t < 0.0);
        assert!((o.r + o.t - 1.0).abs() <= 10.0 * o.est_error);
    }

    #[test]
    fn evanescent_channels_rejected() {
        assert!(matches!(
            integrate_scattering(&p(5.0, 2.0, 1.0), 5.0, 1e-10),
            Err(Error::Propagation { .. })
        ));
        assert!(matches!(
            integrate_scattering(&p(5.0, 2.0, 1.0), 6.0, 1e-10),
            Err(Error::Threshold { .. })
        ));
    }

    #[test]
    fn step_examples() {
        let free = step_reference(&p(0.0, 1.0, 1.0), 3.0).unwrap();
        assert_eq!(free.r, 0.0);
        assert!((free.t - 1.0).abs() < 1e-15);

        let sr = step_reference(&p(5.0, 1.0, 1.0), 2.0).unwrap();
        let (n, u) = (48f64.sqrt(), 8f64.sqrt());
        assert!((sr.r - ((n + u) / (n - u)).powi(2)).abs() < 1e-13);
        assert!(sr.r > 1.0 && sr.superradiant);
        assert!((sr.r + sr.t - 1.0).abs() < 1e-13);
    }

    // Plane waves e^(ik1 x) + r e^(-ik1 x) | t e^(ik2 x) matched in value
    // and slope at x = 0, solved by Cramer's rule.
    #[test]
    fn step_matches_two_region_matching() {
        let (k1, k2) = (168f64.sqrt(), 8f64.sqrt());
        // 1 + r = t,  k1 (1 - r) = k2 t
        let det = -k2 - k1;
        let r = (k2 - k1) / det;
        let t = (-k1 - k1) / det;
        let flux_r = r * r;
        let flux_t = k2 / k1 * t * t;
        let s = step_reference(&p(5.0, 3.0, 1.0), 8.0).unwrap();
        assert!((s.r - flux_r).abs() < 1e-14, "{} vs {}", s.r, flux_r);
        assert!((s.t - flux_t).abs() < 1e-14);
    }
}
