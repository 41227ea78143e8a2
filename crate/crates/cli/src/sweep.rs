//! Energy sweeps: uniform grid, thresholds blanked, rows in index order.

use std::io::Write;

use kgscatter_core::{classify_region, transport, Error, PotentialParams};
use rayon::prelude::*;

use crate::format::{num, region};
use crate::CliError;

pub const DEFAULT_EXCLUSION_MARGIN: f64 = 0.02;
pub const CSV_HEADER: &str = "E,R,T,region,superradiant";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    PlotScript,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Fig2,
    Fig3,
}

impl Preset {
    /// `(a, b, m)`
    pub fn params(self) -> (f64, f64, f64) {
        match self {
            Preset::Fig2 => (5.0, 2.0, 1.0),
            Preset::Fig3 => (5.0, 50.0, 1.0),
        }
    }

    pub const E_MIN: f64 = 1.05;
    pub const E_MAX: f64 = 10.0;
    pub const STEPS: usize = 500;
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub a: f64,
    pub b: f64,
    pub m: f64,
    pub e_min: f64,
    pub e_max: f64,
    pub steps: usize,
    pub exclusion_margin: f64,
    pub output_path: String,
    pub format: OutputFormat,
}

impl SweepConfig {
    pub fn preset(preset: Preset, output_path: impl Into<String>) -> Self {
        let (a, b, m) = preset.params();
        Self {
            a,
            b,
            m,
            e_min: Preset::E_MIN,
            e_max: Preset::E_MAX,
            steps: Preset::STEPS,
            exclusion_margin: DEFAULT_EXCLUSION_MARGIN,
            output_path: output_path.into(),
            format: OutputFormat::Csv,
        }
    }

    pub fn validate(&self) -> Result<PotentialParams, CliError> {
        if !(self.e_min < self.e_max) {
            return Err(CliError::Usage("e-min must be below e-max".into()));
        }
        if self.steps < 2 {
            return Err(CliError::Usage("steps must be at least 2".into()));
        }
        if !(self.exclusion_margin >= 0.0) {
            return Err(CliError::Usage(
                "exclusion margin must be non-negative".into(),
            ));
        }
        Ok(PotentialParams::new(self.a, self.b, self.m)?)
    }

    pub fn energy(&self, i: usize) -> f64 {
        if i + 1 == self.steps {
            return self.e_max;
        }
        self.e_min + (self.e_max - self.e_min) * i as f64 / (self.steps - 1) as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub energy: f64,
    /// `None` for blanked rows (near a threshold, or no incident wave).
    pub r: Option<f64>,
    pub t: Option<f64>,
    pub region: String,
    pub superradiant: Option<bool>,
}

impl SweepRow {
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<f64>| v.map(num).unwrap_or_default();
        format!(
            "{},{},{},{},{}",
            num(self.energy),
            opt(self.r),
            opt(self.t),
            self.region,
            self.superradiant.map(|s| s.to_string()).unwrap_or_default()
        )
    }
}

pub fn sweep_row(params: &PotentialParams, energy: f64, margin: f64) -> Result<SweepRow, CliError> {
    let class = classify_region(params, energy);
    let blank = SweepRow {
        energy,
        r: None,
        t: None,
        region: region(&class),
        superradiant: None,
    };
    let near = params
        .thresholds()
        .iter()
        .any(|t| (energy - t).abs() <= margin);
    if near || class.boundary {
        return Ok(blank);
    }
    match transport(params, energy) {
        Ok(tr) => Ok(SweepRow {
            r: Some(tr.r),
            t: Some(tr.t),
            superradiant: Some(tr.superradiant),
            ..blank
        }),
        Err(Error::Propagation { .. } | Error::Threshold { .. }) => Ok(blank),
        Err(e) => Err(e.into()),
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    let params = config.validate()?;
    (0..config.steps)
        .into_par_iter()
        .map(|i| sweep_row(&params, config.energy(i), config.exclusion_margin))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> std::io::Result<()> {
    let mut buf = String::with_capacity(64 * (rows.len() + 1));
    buf.push_str(CSV_HEADER);
    buf.push('\n');
    for row in rows {
        buf.push_str(&row.to_csv());
        buf.push('\n');
    }
    out.write_all(buf.as_bytes())?;
    out.flush()
}

/// gnuplot script plotting R and T from the sweep CSV.
pub fn plot_script(config: &SweepConfig, csv_path: &str) -> String {
    format!(
        "# R and T versus E for a = {a}, b = {b}, m = {m}\n\
         set datafile separator ','\n\
         set key autotitle columnhead\n\
         set xlabel 'E'\n\
         set multiplot layout 1,2\n\
         set ylabel 'R'\n\
         plot '{csv_path}' using 1:2 with lines title 'R'\n\
         set ylabel 'T'\n\
         plot '{csv_path}' using 1:3 with lines title 'T'\n\
         unset multiplot\n",
        a = config.a,
        b = config.b,
        m = config.m,
    )
}
