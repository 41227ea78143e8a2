// inherent f64 math is std-only
#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::PI;

use crate::{ComplexScalar, Error, Result};

/// Distance to a non-positive integer below which `z` is treated as a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

pub fn is_gamma_pole(z: ComplexScalar) -> bool {
    if z.im.abs() > POLE_TOLERANCE || z.re > POLE_TOLERANCE {
        return false;
    }
    (z.re - z.re.round()).abs() <= POLE_TOLERANCE
}

/// Principal branch of `ln Γ(z)`.
///
/// Lanczos (g = 7, nine terms) for `Re z >= 1/2`; below that the
/// reflection formula with the branch correction that keeps the result
/// analytic off the negative real axis.
pub fn log_gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    if is_gamma_pole(z) {
        return Err(Error::Pole(z));
    }
    Ok(if z.re < 0.5 {
        log_gamma_reflected(z)
    } else {
        log_gamma_lanczos(z)
    })
}

/// `ln Γ(z)`, or `None` on a pole, where the reciprocal Gamma vanishes.
pub fn ln_gamma_or_pole(z: ComplexScalar) -> Result<Option<ComplexScalar>> {
    match log_gamma(z) {
        Ok(v) => Ok(Some(v)),
        Err(Error::Pole(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn log_gamma_lanczos(z: ComplexScalar) -> ComplexScalar {
    let z = z - 1.0;
    let mut sum = ComplexScalar::new(LANCZOS[0], 0.0);
    for (k, &c) in LANCZOS.iter().enumerate().skip(1) {
        sum += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + sum.ln() + HALF_LN_2PI
}

fn log_gamma_reflected(z: ComplexScalar) -> ComplexScalar {
    // floor(Re z / 2 + 1/4) counts the 2πi sheets crossed by ln sin(πz).
    let sheet = (0.5 * z.re + 0.25).floor();
    let correction = ComplexScalar::new(LN_PI, (2.0 * PI).copysign(z.im) * sheet);
    correction - ln_sin_pi(z) - log_gamma_lanczos(1.0 - z)
}

fn sin_cos_pi(x: f64) -> (f64, f64) {
    let r = x - 2.0 * (0.5 * x).round();
    let (s, c) = (PI * r).sin_cos();
    // exact zeros at integers and half-integers
    if r == r.round() {
        (0.0, c)
    } else if (2.0 * r) == (2.0 * r).round() {
        (s, 0.0)
    } else {
        (s, c)
    }
}

/// Principal `ln sin(πz)`, computed without overflowing for large `|Im z|`.
fn ln_sin_pi(z: ComplexScalar) -> ComplexScalar {
    let (s, c) = sin_cos_pi(z.re);
    let py = PI * z.im;
    let arg = (c * py.tanh()).atan2(s);
    let ln_abs = if py.abs() > 30.0 {
        py.abs() - core::f64::consts::LN_2
    } else {
        0.5 * (s * s + py.sinh().powi(2)).ln()
    };
    ComplexScalar::new(ln_abs, arg)
}
