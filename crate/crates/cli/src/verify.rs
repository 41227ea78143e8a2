//! Closed form versus direct integration on seeded random instances, and
//! the sharp-step limit.

use std::fmt::Write;

use kgscatter_core::{integrate_scattering, step_reference, transport, PotentialParams};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::format::num;
use crate::CliError;

pub const DEFAULT_TOL: f64 = 1e-6;
pub const DEFAULT_ODE_TOL: f64 = 1e-10;
/// Required `|R(b) - R_step|` at the largest `b` of [`STEP_LIMIT_B`].
pub const STEP_LIMIT_TOL: f64 = 1e-3;
pub const STEP_LIMIT_B: [f64; 4] = [1e1, 1e2, 1e3, 1e4];

/// Kinetic distance `|E ± a| - m` kept from every threshold when sampling.
const SAMPLE_GAP: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Instance {
    pub params: PotentialParams,
    pub energy: f64,
}

/// Values a caller pins; the rest are drawn. With the energy pinned the
/// instance is fixed and unpinned parameters take the crate defaults.
#[derive(Debug, Clone, Copy, Default)]
pub struct Pins {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub m: Option<f64>,
    pub energy: Option<f64>,
}

/// Draws `a ∈ [0.5, 5]`, `b ∈ [0.5, 10]`, `m ∈ [0.5, 2]` and an energy in a
/// region where both channels propagate, chosen uniformly among the
/// fully propagating, superradiant and negative-continuum bands.
pub fn random_instances(n: usize, seed: u64, mut pins: Pins) -> Result<Vec<Instance>, CliError> {
    let mut rng = StdRng::seed_from_u64(seed);
    if pins.energy.is_some() {
        pins = Pins {
            a: Some(pins.a.unwrap_or(crate::DEFAULT_A)),
            b: Some(pins.b.unwrap_or(crate::DEFAULT_B)),
            m: Some(pins.m.unwrap_or(crate::DEFAULT_M)),
            ..pins
        };
    }
    (0..n)
        .map(|_| {
            let a = pins.a.unwrap_or_else(|| rng.gen_range(0.5..=5.0));
            let b = pins.b.unwrap_or_else(|| rng.gen_range(0.5..=10.0));
            let m = pins.m.unwrap_or_else(|| rng.gen_range(0.5..=2.0));
            let params = PotentialParams::new(a, b, m)?;
            let energy = match pins.energy {
                Some(e) => e,
                None => draw_energy(&mut rng, a.abs(), m),
            };
            Ok(Instance { params, energy })
        })
        .collect()
}

fn draw_energy(rng: &mut StdRng, a: f64, m: f64) -> f64 {
    let lo_sr = -a + m + SAMPLE_GAP;
    let hi_sr = a - m - SAMPLE_GAP;
    let bands = if hi_sr > lo_sr { 3 } else { 2 };
    match rng.gen_range(0..bands) {
        0 => a + m + SAMPLE_GAP + rng.gen_range(0.0..4.0),
        1 => -a - m - SAMPLE_GAP - rng.gen_range(0.0..4.0),
        _ => rng.gen_range(lo_sr..hi_sr),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub instance: Instance,
    pub r_analytic: f64,
    pub t_analytic: f64,
    pub r_numeric: f64,
    pub t_numeric: f64,
}

impl Comparison {
    pub fn delta_r(&self) -> f64 {
        (self.r_analytic - self.r_numeric).abs()
    }

    pub fn delta_t(&self) -> f64 {
        (self.t_analytic - self.t_numeric).abs()
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.delta_r() <= tol && self.delta_t() <= tol
    }
}

pub fn compare(instance: Instance, ode_tol: f64) -> Result<Comparison, CliError> {
    let an = transport(&instance.params, instance.energy)?;
    let num = integrate_scattering(&instance.params, instance.energy, ode_tol)?;
    Ok(Comparison {
        instance,
        r_analytic: an.r,
        t_analytic: an.t,
        r_numeric: num.r,
        t_numeric: num.t,
    })
}

/// Runs the comparisons and renders one line per instance plus a summary.
/// Returns the report and the number of failures.
pub fn verify_report(
    instances: &[Instance],
    tol: f64,
    ode_tol: f64,
) -> Result<(String, usize), CliError> {
    let mut out = String::new();
    let mut failed = 0;
    for (i, inst) in instances.iter().enumerate() {
        let c = compare(*inst, ode_tol)?;
        let ok = c.passes(tol);
        failed += usize::from(!ok);
        let q = inst.params;
        let _ = writeln!(
            out,
            "{i:>3} a={:.6} b={:.6} m={:.6} E={:.6} R={} |dR|={:.3e} |dT|={:.3e} {}",
            q.a,
            q.b,
            q.m,
            inst.energy,
            num(c.r_analytic),
            c.delta_r(),
            c.delta_t(),
            if ok { "PASS" } else { "FAIL" }
        );
    }
    let total = instances.len();
    let _ = writeln!(
        out,
        "{} {}/{} within tol={:e}",
        if failed == 0 { "PASS" } else { "FAIL" },
        total - failed,
        total,
        tol
    );
    Ok((out, failed))
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepLimit {
    pub r_step: f64,
    /// `(b, |R(b) - R_step|)`
    pub errors: Vec<(f64, f64)>,
}

impl StepLimit {
    pub fn monotone(&self) -> bool {
        self.errors.windows(2).all(|w| w[1].1 < w[0].1)
    }

    pub fn passes(&self) -> bool {
        self.monotone() && self.errors.last().is_some_and(|e| e.1 <= STEP_LIMIT_TOL)
    }
}

pub fn step_limit(a: f64, m: f64, energy: f64) -> Result<StepLimit, CliError> {
    let r_step = step_reference(&PotentialParams::new(a, 1.0, m)?, energy)?.r;
    let errors = STEP_LIMIT_B
        .iter()
        .map(|&b| {
            let r = transport(&PotentialParams::new(a, b, m)?, energy)?.r;
            Ok((b, (r - r_step).abs()))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(StepLimit { r_step, errors })
}

pub fn step_limit_report(s: &StepLimit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "R_step = {}", num(s.r_step));
    for (b, err) in &s.errors {
        let _ = writeln!(out, "b={b:e} |R(b)-R_step|={err:.3e}");
    }
    let _ = writeln!(
        out,
        "{} monotone={} final<={:e}",
        if s.passes() { "PASS" } else { "FAIL" },
        s.monotone(),
        STEP_LIMIT_TOL
    );
    out
}
