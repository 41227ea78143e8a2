//! Gauss hypergeometric function `₂F₁(p, q; c; z)` for real `z <= 0`.
//!
//! Three evaluation routes are exposed so they can be checked against one
//! another in their overlaps:
//!
//! * [`series`]: the defining power series, `|z| <= 0.5`,
//! * [`pfaff`]: `(1-z)^(-p) ₂F₁(p, c-q; c; z/(z-1))`, `0.5 < |z| <= 2`,
//! * [`inversion`]: the `z -> 1/z` connection formula, `|z| > 2`.
//!
//! [`hyp2f1`] picks the route from `|z|`.

// inherent f64 math is std-only
#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::{is_gamma_pole, ln_gamma_or_pole};
use crate::{ComplexScalar, Error, Result};

/// Maximum number of series terms before giving up.
pub const MAX_TERMS: usize = 10_000;
/// Upper `|z|` for the direct series.
pub const SERIES_RADIUS: f64 = 0.5;
/// Upper `|z|` for the Pfaff route; beyond it the inversion formula is used.
pub const PFAFF_RADIUS: f64 = 2.0;
/// Distance of `p - q` to an integer below which inversion is refused.
pub const DEGENERATE_TOLERANCE: f64 = 1e-10;

/// `₂F₁(p, q; c; z)` on the negative real axis (any complex `z` with
/// `|z| <= 0.5` is also accepted).
pub fn hyp2f1(
    p: ComplexScalar,
    q: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<ComplexScalar> {
    check_c(c)?;
    let r = z.norm();
    if r <= SERIES_RADIUS {
        return series(p, q, c, z);
    }
    if z.im != 0.0 || z.re > 0.0 {
        return Err(Error::Domain(z));
    }
    if r <= PFAFF_RADIUS {
        pfaff(p, q, c, z)
    } else {
        inversion(p, q, c, z)
    }
}

fn check_c(c: ComplexScalar) -> Result<()> {
    if is_gamma_pole(c) {
        Err(Error::Pole(c))
    } else {
        Ok(())
    }
}

/// Direct power series. Requires `|z| < 1`.
pub fn series(
    p: ComplexScalar,
    q: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<ComplexScalar> {
    check_c(c)?;
    if z.norm() >= 1.0 {
        return Err(Error::Domain(z));
    }
    let mut term = ComplexScalar::new(1.0, 0.0);
    let mut sum = term;
    // terms may shrink before they start decaying for good; only trust the
    // stopping test once n is past the parameter magnitudes
    let warmup = p.norm() + q.norm() + c.norm();
    let mut small_in_a_row = 0;
    for n in 0..MAX_TERMS {
        let k = n as f64;
        term *= (p + k) * (q + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if term == ComplexScalar::new(0.0, 0.0) {
            return finite(sum);
        }
        if term.norm() <= f64::EPSILON * 0.5 * sum.norm() && k > warmup {
            small_in_a_row += 1;
            if small_in_a_row >= 2 {
                return finite(sum);
            }
        } else {
            small_in_a_row = 0;
        }
    }
    Err(Error::NonConvergence { terms: MAX_TERMS })
}

/// Pfaff transformation onto `w = z/(z-1)`, which maps `(-inf, 0]` into `[0, 1)`.
pub fn pfaff(
    p: ComplexScalar,
    q: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<ComplexScalar> {
    check_c(c)?;
    let one_minus_z = 1.0 - z;
    let w = z / (z - 1.0);
    let f = series(p, c - q, c, w)?;
    finite((-p * one_minus_z.ln()).exp() * f)
}

/// Connection formula onto `1/z`:
///
/// ```text
/// F(p,q;c;z) = Γ(c)Γ(q-p) / (Γ(q)Γ(c-p)) (-z)^(-p) F(p, 1-c+p; 1-q+p; 1/z)
///            + Γ(c)Γ(p-q) / (Γ(p)Γ(c-q)) (-z)^(-q) F(q, 1-c+q; 1-p+q; 1/z)
/// ```
///
/// Only valid for real `z < 0` here; `p - q` must not be an integer.
pub fn inversion(
    p: ComplexScalar,
    q: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<ComplexScalar> {
    check_c(c)?;
    if z.im != 0.0 || z.re >= 0.0 {
        return Err(Error::Domain(z));
    }
    let d = p - q;
    if d.im.abs() <= DEGENERATE_TOLERANCE && (d.re - d.re.round()).abs() <= DEGENERATE_TOLERANCE {
        return Err(Error::DegenerateTransform { p_minus_q: d });
    }
    let ln_neg_z = (-z.re).ln();
    let inv = z.inv();
    let first = inversion_term(p, q, c, ln_neg_z, inv)?;
    let second = inversion_term(q, p, c, ln_neg_z, inv)?;
    finite(first + second)
}

fn inversion_term(
    s: ComplexScalar,
    t: ComplexScalar,
    c: ComplexScalar,
    ln_neg_z: f64,
    inv: ComplexScalar,
) -> Result<ComplexScalar> {
    let ln_gc = ln_gamma_or_pole(c)?.ok_or(Error::Pole(c))?;
    let ln_gd = ln_gamma_or_pole(t - s)?.ok_or(Error::Pole(t - s))?;
    // poles in the denominator make the whole term vanish
    let (Some(ln_gt), Some(ln_gcs)) = (ln_gamma_or_pole(t)?, ln_gamma_or_pole(c - s)?) else {
        return Ok(ComplexScalar::new(0.0, 0.0));
    };
    let ln_prefactor = ln_gc + ln_gd - ln_gt - ln_gcs - s * ln_neg_z;
    if ln_prefactor.re > 700.0 {
        return Err(Error::Range);
    }
    let f = series(s, 1.0 - c + s, 1.0 - t + s, inv)?;
    Ok(ln_prefactor.exp() * f)
}

fn finite(v: ComplexScalar) -> Result<ComplexScalar> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite)
    }
}
