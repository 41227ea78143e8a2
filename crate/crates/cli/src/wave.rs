//! Wavefunction samples of the total solution on a uniform x grid.

use std::io::Write;

use kgscatter_core::analytic::ScatteringSolution;
use kgscatter_core::{current, Branch, PotentialParams, WavefunctionSample};

use crate::format::num;
use crate::CliError;

pub const CSV_HEADER: &str = "x,phi_re,phi_im,dphi_re,dphi_im,current";

pub fn x_grid(xmin: f64, xmax: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![xmin],
        n => (0..n)
            .map(|i| {
                if i + 1 == n {
                    xmax
                } else {
                    xmin + (xmax - xmin) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

pub fn samples(
    params: &PotentialParams,
    energy: f64,
    xs: &[f64],
) -> Result<Vec<WavefunctionSample>, CliError> {
    let sol = ScatteringSolution::new(params, energy)?;
    xs.iter()
        .map(|&x| Ok(sol.sample(x, Branch::Total)?))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[WavefunctionSample], mut out: W) -> std::io::Result<()> {
    let mut buf = String::new();
    buf.push_str(CSV_HEADER);
    buf.push('\n');
    for s in rows {
        buf.push_str(&format!(
            "{},{},{},{},{},{}\n",
            num(s.x),
            num(s.phi.re),
            num(s.phi.im),
            num(s.dphi.re),
            num(s.dphi.im),
            num(current(s.phi, s.dphi))
        ));
    }
    out.write_all(buf.as_bytes())?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_particle_current_is_momentum() {
        let q = PotentialParams::new(0.0, 2.0, 1.0).unwrap();
        let rows = samples(&q, 2.0, &x_grid(-4.0, 4.0, 41)).unwrap();
        for s in rows {
            assert!((current(s.phi, s.dphi) - 3f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn grids() {
        assert_eq!(x_grid(0.0, 5.0, 1), vec![0.0]);
        assert_eq!(x_grid(-1.0, 1.0, 3), vec![-1.0, 0.0, 1.0]);
    }
}
