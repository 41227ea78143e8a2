//! Single-energy report for `coeffs`.

use std::fmt::Write;

use kgscatter_core::analytic::ScatteringSolution;
use kgscatter_core::{classify_region, dispersion, PotentialParams};

use crate::format::{complex, num, region};
use crate::CliError;

pub fn coeffs_report(params: &PotentialParams, energy: f64) -> Result<String, CliError> {
    let class = classify_region(params, energy);
    let d = dispersion(params, energy);
    let sol = ScatteringSolution::new(params, energy)?;
    let tr = sol.transport();
    let amp = sol.amplitudes;

    let mut out = String::new();
    let _ = writeln!(out, "a = {}", num(params.a));
    let _ = writeln!(out, "b = {}", num(params.b));
    let _ = writeln!(out, "m = {}", num(params.m));
    let _ = writeln!(out, "E = {}", num(energy));
    let _ = writeln!(out, "nu = {}", complex(d.nu));
    let _ = writeln!(out, "mu = {}", complex(d.mu));
    let _ = writeln!(out, "lambda = {}", complex(d.lambda));
    let _ = writeln!(out, "A = {}", complex(amp.a));
    let _ = writeln!(out, "B = {}", complex(amp.b));
    let _ = writeln!(out, "R = {}", num(tr.r));
    let _ = writeln!(out, "T = {}", num(tr.t));
    let _ = writeln!(out, "R+T = {}", num(tr.r + tr.t));
    let _ = writeln!(out, "region = {}", region(&class));
    let _ = writeln!(out, "superradiant = {}", tr.superradiant);
    if let Ok(mismatch) = sol.representation_mismatch() {
        let _ = writeln!(out, "origin_mismatch = {}", num(mismatch));
    }
    Ok(out)
}
