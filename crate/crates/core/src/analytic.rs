//! Closed-form scattering solution.
//!
//! The solution is normalized to a unit transmitted wave `exp(2ibμx)` on
//! the right. On the left it reads `A·φ_inc + B·φ_ref`, with
//!
//! ```text
//! A = Γ(1-2iμ)Γ(-2iν) / (Γ(λ-iν-iμ) Γ(1-λ-iν-iμ))
//! B = Γ(1-2iμ)Γ( 2iν) / (Γ(λ+iν-iμ) Γ(1-λ+iν-iμ))
//! ```
//!
//! both obtained by continuing the transmitted wave through the `z -> 1/z`
//! connection formula. All Gamma products are summed in log space.

// inherent f64 math is std-only
#[allow(unused_imports)]
use num_traits::Float;

use crate::model::{classify_region, dispersion, Classification, Dispersion, PotentialParams};
use crate::specfun::{hyp2f1, ln_gamma_or_pole};
use crate::{ComplexScalar, Error, Result};

const I: ComplexScalar = ComplexScalar::new(0.0, 1.0);
const LOG_OVERFLOW: f64 = 700.0;

/// Incident and reflected amplitudes for a unit transmitted wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Amplitudes {
    pub a: ComplexScalar,
    pub b: ComplexScalar,
    /// `ln A`
    pub ln_a: ComplexScalar,
    /// `ln B`, `None` when `B` vanishes identically.
    pub ln_b: Option<ComplexScalar>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transport {
    pub r: f64,
    pub t: f64,
    pub region: Classification,
    pub superradiant: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Incident,
    Reflected,
    Transmitted,
    Total,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionSample {
    pub x: f64,
    pub phi: ComplexScalar,
    pub dphi: ComplexScalar,
    pub branch: Branch,
}

/// Everything needed to evaluate observables at one energy. Building it
/// does the Gamma work once; wavefunction samples reuse it.
#[derive(Debug, Clone, Copy)]
pub struct ScatteringSolution {
    pub params: PotentialParams,
    pub energy: f64,
    pub dispersion: Dispersion,
    pub region: Classification,
    pub amplitudes: Amplitudes,
}

impl ScatteringSolution {
    pub fn new(params: &PotentialParams, energy: f64) -> Result<Self> {
        let region = classify_region(params, energy);
        if region.boundary {
            return Err(Error::Threshold { energy });
        }
        let d = dispersion(params, energy);
        if !d.nu_propagating {
            return Err(Error::Propagation { energy });
        }
        if d.nu.re == 0.0 {
            return Err(Error::Threshold { energy });
        }
        let amplitudes = compute_amplitudes(&d, energy)?;
        Ok(Self {
            params: *params,
            energy,
            dispersion: d,
            region,
            amplitudes,
        })
    }

    pub fn transport(&self) -> Transport {
        let d = &self.dispersion;
        let amp = &self.amplitudes;
        let r = match amp.ln_b {
            Some(ln_b) => (2.0 * (ln_b.re - amp.ln_a.re)).exp(),
            None => 0.0,
        };
        // a decaying transmitted wave carries no current
        let t = if d.mu_propagating {
            (d.mu.re / d.nu.re) * (-2.0 * amp.ln_a.re).exp()
        } else {
            0.0
        };
        Transport {
            r,
            t,
            region: self.region,
            superradiant: d.mu_propagating && t < 0.0,
        }
    }

    pub fn sample(&self, x: f64, branch: Branch) -> Result<WavefunctionSample> {
        let (phi, dphi) = match branch {
            Branch::Incident => self.incident(x)?,
            Branch::Reflected => self.reflected(x)?,
            Branch::Transmitted => self.transmitted(x)?,
            Branch::Total if x <= 0.0 => {
                let (p1, d1) = self.incident(x)?;
                let (p2, d2) = self.reflected(x)?;
                (p1 + p2, d1 + d2)
            }
            Branch::Total => self.transmitted(x)?,
        };
        Ok(WavefunctionSample {
            x,
            phi,
            dphi,
            branch,
        })
    }

    /// Relative mismatch of `(φ, φ')` between the left representation and
    /// the transmitted one at `x = 0`. Both describe the same solution, so
    /// this should sit at rounding level.
    pub fn representation_mismatch(&self) -> Result<f64> {
        let (p1, d1) = self.incident(0.0)?;
        let (p2, d2) = self.reflected(0.0)?;
        let (pt, dt) = self.transmitted(0.0)?;
        let scale = pt.norm() + dt.norm();
        Ok(((p1 + p2 - pt).norm() + (d1 + d2 - dt).norm()) / scale)
    }

    fn incident(&self, x: f64) -> Result<(ComplexScalar, ComplexScalar)> {
        let d = &self.dispersion;
        let (iv, im, lam) = (I * d.nu, I * d.mu, d.lambda);
        left_kernel(
            self.params.b,
            x,
            lam,
            iv,
            (iv + lam - im, iv + lam + im, 1.0 + 2.0 * iv),
            self.amplitudes.a,
        )
    }

    fn reflected(&self, x: f64) -> Result<(ComplexScalar, ComplexScalar)> {
        if self.amplitudes.ln_b.is_none() {
            return Ok((ComplexScalar::new(0.0, 0.0), ComplexScalar::new(0.0, 0.0)));
        }
        let d = &self.dispersion;
        let (iv, im, lam) = (I * d.nu, I * d.mu, d.lambda);
        left_kernel(
            self.params.b,
            x,
            lam,
            -iv,
            (-iv + lam + im, -iv + lam - im, 1.0 - 2.0 * iv),
            self.amplitudes.b,
        )
    }

    /// `(1 + e^(-2bx))^λ e^(2ibμx) F(iν+λ-iμ, -iν+λ-iμ; 1-2iμ; -e^(-2bx))`
    fn transmitted(&self, x: f64) -> Result<(ComplexScalar, ComplexScalar)> {
        let d = &self.dispersion;
        let b = self.params.b;
        let (iv, im, lam) = (I * d.nu, I * d.mu, d.lambda);
        let (p, q, c) = (iv + lam - im, -iv + lam - im, 1.0 - 2.0 * im);
        let w = -(-2.0 * b * x).exp();
        let wz = ComplexScalar::new(w, 0.0);
        let f = hyp2f1(p, q, c, wz)?;
        let df_dw = p * q / c * hyp2f1(p + 1.0, q + 1.0, c + 1.0, wz)?;
        let pre = (lam * softplus(-2.0 * b * x) + 2.0 * b * im * x).exp();
        let dln_pre = -2.0 * b * lam * logistic(-2.0 * b * x) + 2.0 * b * im;
        let phi = pre * f;
        let dphi = pre * (dln_pre * f + df_dw * (-2.0 * b * w));
        check_finite(phi, dphi)
    }
}

/// `amp (1 + e^(2bx))^λ e^(2b·ik x) F(p, q; c; -e^(2bx))` and its x-derivative.
fn left_kernel(
    b: f64,
    x: f64,
    lam: ComplexScalar,
    ik: ComplexScalar,
    (p, q, c): (ComplexScalar, ComplexScalar, ComplexScalar),
    amp: ComplexScalar,
) -> Result<(ComplexScalar, ComplexScalar)> {
    let y = -(2.0 * b * x).exp();
    let yz = ComplexScalar::new(y, 0.0);
    let f = hyp2f1(p, q, c, yz)?;
    let df_dy = p * q / c * hyp2f1(p + 1.0, q + 1.0, c + 1.0, yz)?;
    let pre = amp * (lam * softplus(2.0 * b * x) + 2.0 * b * ik * x).exp();
    let dln_pre = 2.0 * b * lam * logistic(2.0 * b * x) + 2.0 * b * ik;
    let phi = pre * f;
    let dphi = pre * (dln_pre * f + df_dy * (2.0 * b * y));
    check_finite(phi, dphi)
}

/// `ln(1 + e^t)`
fn softplus(t: f64) -> f64 {
    t.max(0.0) + (-t.abs()).exp().ln_1p()
}

/// `1 / (1 + e^(-t))`
fn logistic(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    }
}

fn check_finite(phi: ComplexScalar, dphi: ComplexScalar) -> Result<(ComplexScalar, ComplexScalar)> {
    if [phi.re, phi.im, dphi.re, dphi.im]
        .iter()
        .all(|v| v.is_finite())
    {
        Ok((phi, dphi))
    } else {
        Err(Error::NonFinite)
    }
}

fn numerator_ln_gamma(z: ComplexScalar, energy: f64) -> Result<ComplexScalar> {
    // Γ(1-2iμ) and Γ(±2iν) only reach a pole at a vanishing momentum
    ln_gamma_or_pole(z)?.ok_or(Error::Threshold { energy })
}

fn denominator_ln_gamma(z1: ComplexScalar, z2: ComplexScalar) -> Result<Option<ComplexScalar>> {
    Ok(match (ln_gamma_or_pole(z1)?, ln_gamma_or_pole(z2)?) {
        (Some(u), Some(v)) => Some(u + v),
        _ => None,
    })
}

fn compute_amplitudes(d: &Dispersion, energy: f64) -> Result<Amplitudes> {
    let (iv, im) = (I * d.nu, I * d.mu);
    let (lam, comp) = (d.lambda, d.lambda_complement);

    let ln_common = numerator_ln_gamma(1.0 - 2.0 * im, energy)?;
    let ln_num_a = ln_common + numerator_ln_gamma(-2.0 * iv, energy)?;
    let ln_num_b = ln_common + numerator_ln_gamma(2.0 * iv, energy)?;

    let ln_a = match denominator_ln_gamma(lam - iv - im, comp - iv - im)? {
        Some(den) => ln_num_a - den,
        // A = 0 would mean no incident wave at all
        None => return Err(Error::Range),
    };
    let ln_b = denominator_ln_gamma(lam + iv - im, comp + iv - im)?.map(|den| ln_num_b - den);

    if ln_a.re.abs() > LOG_OVERFLOW || ln_b.is_some_and(|l| l.re.abs() > LOG_OVERFLOW) {
        return Err(Error::Range);
    }
    Ok(Amplitudes {
        a: ln_a.exp(),
        b: ln_b.map_or(ComplexScalar::new(0.0, 0.0), |l| l.exp()),
        ln_a,
        ln_b,
    })
}

pub fn amplitudes(params: &PotentialParams, energy: f64) -> Result<Amplitudes> {
    Ok(ScatteringSolution::new(params, energy)?.amplitudes)
}

pub fn transport(params: &PotentialParams, energy: f64) -> Result<Transport> {
    Ok(ScatteringSolution::new(params, energy)?.transport())
}

pub fn wavefunction(
    params: &PotentialParams,
    energy: f64,
    x: f64,
    branch: Branch,
) -> Result<WavefunctionSample> {
    ScatteringSolution::new(params, energy)?.sample(x, branch)
}

/// Conserved current `Im(conj(φ) φ')`; a plane wave `e^(ikx)` carries `+k`.
pub fn current(phi: ComplexScalar, dphi: ComplexScalar) -> f64 {
    (phi.conj() * dphi).im
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::EnergyRegion;

    fn p(a: f64, b: f64, m: f64) -> PotentialParams {
        PotentialParams::new(a, b, m).unwrap()
    }

    #[test]
    fn free_particle_amplitudes() {
        let amp = amplitudes(&p(0.0, 1.0, 1.0), 2.0).unwrap();
        assert!((amp.a - 1.0).norm() < 1e-14);
        assert_eq!(amp.b, ComplexScalar::new(0.0, 0.0));
        assert!(amp.ln_b.is_none());
        let tr = transport(&p(0.0, 1.0, 1.0), 2.0).unwrap();
        assert_eq!(tr.r, 0.0);
        assert!((tr.t - 1.0).abs() < 1e-14);
    }

    #[test]
    fn evanescent_transmission_reflects_fully() {
        let tr = transport(&p(5.0, 2.0, 1.0), 5.0).unwrap();
        assert!((tr.r - 1.0).abs() < 1e-10);
        assert_eq!(tr.t, 0.0);
        assert!(!tr.superradiant);
        assert_eq!(tr.region.region, EnergyRegion::TransmittedEvanescent);
    }

    #[test]
    fn superradiant_point() {
        let amp = amplitudes(&p(5.0, 2.0, 1.0), 2.0).unwrap();
        assert!(amp.b.norm() > amp.a.norm());
        let tr = transport(&p(5.0, 2.0, 1.0), 2.0).unwrap();
        assert!(tr.r > 1.0 && tr.t < 0.0 && tr.superradiant);
        assert!((tr.r + tr.t - 1.0).abs() < 1e-10);
    }

    // mpmath at 30 digits from the Gamma expressions above
    #[test]
    fn reference_values() {
        let cases = [
            (8.0, 0.000_220_052_694_296, 0.999_779_947_306),
            (2.0, 1.936_892_404_819_38, -0.936_892_404_819_379),
            (7.0, 0.006_530_458_903_792_77, 0.993_469_541_096_207),
        ];
        for (e, r, t) in cases {
            let tr = transport(&p(5.0, 2.0, 1.0), e).unwrap();
            assert!(
                (tr.r - r).abs() <= 1e-11 * r.abs().max(1e-3),
                "E = {e}: R = {}",
                tr.r
            );
            assert!((tr.t - t).abs() <= 1e-11, "E = {e}: T = {}", tr.t);
        }
    }

    #[test]
    fn errors() {
        let q = p(5.0, 2.0, 1.0);
        assert_eq!(
            transport(&q, 6.0).unwrap_err(),
            Error::Threshold { energy: 6.0 }
        );
        assert_eq!(
            transport(&q, 4.0).unwrap_err(),
            Error::Threshold { energy: 4.0 }
        );
        assert_eq!(
            transport(&q, -5.0).unwrap_err(),
            Error::Propagation { energy: -5.0 }
        );
    }

    #[test]
    fn mirrored_potential_has_same_coefficients() {
        let a = transport(&p(5.0, 2.0, 1.0), 2.0).unwrap();
        let b = transport(&p(-5.0, 2.0, 1.0), 2.0).unwrap();
        assert!((a.r - b.r).abs() < 1e-10 && (a.t - b.t).abs() < 1e-10);
        assert!(b.region.mirrored);
        // for a < 0 the left channel is the evanescent one inside |E - |a|| < m
        assert!(matches!(
            transport(&p(-5.0, 2.0, 1.0), 5.0),
            Err(Error::Propagation { .. })
        ));
        let flipped = transport(&p(-5.0, 2.0, 1.0), -5.0).unwrap();
        assert!((flipped.r - 1.0).abs() < 1e-10 && flipped.t == 0.0);
    }

    #[test]
    fn current_examples() {
        let k = 3.0;
        let x = 0.7;
        let phi = (I * k * x).exp();
        assert!((current(phi, I * k * phi) - 3.0).abs() < 1e-15);
        assert_eq!(
            current(ComplexScalar::new(2.0, 0.0), ComplexScalar::new(-1.0, 0.0)),
            0.0
        );

        let (a, b) = (ComplexScalar::new(0.4, -0.3), ComplexScalar::new(0.1, 0.2));
        let q = 2.0 * 1.5 * 0.8;
        let phi = a * (I * q * x).exp() + b * (-I * q * x).exp();
        let dphi = I * q * (a * (I * q * x).exp() - b * (-I * q * x).exp());
        let want = q * (a.norm_sqr() - b.norm_sqr());
        assert!((current(phi, dphi) - want).abs() < 1e-15);
    }

    #[test]
    fn origin_prefactor() {
        let sol = ScatteringSolution::new(&p(5.0, 2.0, 1.0), 8.0).unwrap();
        let d = sol.dispersion;
        let s = sol.sample(0.0, Branch::Incident).unwrap();
        let (iv, im, lam) = (I * d.nu, I * d.mu, d.lambda);
        let f = hyp2f1(
            iv + lam - im,
            iv + lam + im,
            1.0 + 2.0 * iv,
            ComplexScalar::new(-1.0, 0.0),
        )
        .unwrap();
        let want = sol.amplitudes.a * (lam * core::f64::consts::LN_2).exp() * f;
        assert!((s.phi - want).norm() < 1e-14 * want.norm());
    }

    #[test]
    fn representations_agree_at_origin() {
        for (a, b, m, e) in [
            (5.0, 2.0, 1.0, 8.0),
            (5.0, 2.0, 1.0, 2.0),
            (1.0, 3.0, 0.5, 2.5),
        ] {
            let sol = ScatteringSolution::new(&p(a, b, m), e).unwrap();
            assert!(sol.representation_mismatch().unwrap() < 1e-9);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let sol = ScatteringSolution::new(&p(5.0, 2.0, 1.0), 8.0).unwrap();
        let h = 1e-5;
        for x in [-1.3, -0.2, 0.4, 1.1] {
            let s = sol.sample(x, Branch::Total).unwrap();
            let fp = sol.sample(x + h, Branch::Total).unwrap().phi;
            let fm = sol.sample(x - h, Branch::Total).unwrap().phi;
            let fd = (fp - fm) / (2.0 * h);
            assert!((fd - s.dphi).norm() < 1e-8 * s.dphi.norm(), "x = {x}");
        }
    }
}
