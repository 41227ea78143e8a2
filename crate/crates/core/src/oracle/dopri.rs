//! Dormand-Prince 5(4) with embedded error control, for complex states.

// inherent f64 math is std-only
#[allow(unused_imports)]
use num_traits::Float;

use crate::{ComplexScalar, Error, Result};

/// Step cap (accepted plus rejected).
pub const MAX_STEPS: usize = 10_000_000;

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// difference between the 5th and embedded 4th order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const FAC_MIN: f64 = 0.2;
const FAC_MAX: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dopri5 {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct IntegrationStats {
    pub accepted: usize,
    pub rejected: usize,
    /// Sum over accepted steps of the scaled local error times `rtol`.
    pub error_sum: f64,
}

type State<const N: usize> = [ComplexScalar; N];

fn axpy<const N: usize>(y: &State<N>, h: f64, terms: &[(f64, &State<N>)]) -> State<N> {
    let mut out = *y;
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = ComplexScalar::new(0.0, 0.0);
        for (w, k) in terms {
            acc += *w * k[i];
        }
        *o += h * acc;
    }
    out
}

impl Dopri5 {
    pub fn new(rtol: f64, atol: f64) -> Self {
        Self {
            rtol,
            atol,
            max_steps: MAX_STEPS,
        }
    }

    fn scaled_norm<const N: usize>(&self, v: &State<N>, y: &State<N>, y_new: &State<N>) -> f64 {
        let mut s = 0.0;
        for i in 0..N {
            let sk = self.atol + self.rtol * y[i].norm().max(y_new[i].norm());
            s += (v[i].norm() / sk).powi(2);
        }
        (s / N as f64).sqrt()
    }

    fn initial_step<const N: usize, F>(
        &self,
        f: &F,
        x0: f64,
        y0: &State<N>,
        f0: &State<N>,
        dir: f64,
    ) -> f64
    where
        F: Fn(f64, &State<N>) -> State<N>,
    {
        let d0 = self.scaled_norm(y0, y0, y0);
        let d1 = self.scaled_norm(f0, y0, y0);
        let h0 = if d0 < 1e-5 || d1 < 1e-5 {
            1e-6
        } else {
            0.01 * d0 / d1
        };
        let y1 = axpy(y0, dir * h0, &[(1.0, f0)]);
        let f1 = f(x0 + dir * h0, &y1);
        let diff = axpy(&f1, -1.0, &[(1.0, f0)]);
        let d2 = self.scaled_norm(&diff, y0, y0) / h0;
        let dm = d1.max(d2);
        let h1 = if dm <= 1e-15 {
            (h0 * 1e-3).max(1e-6)
        } else {
            (0.01 / dm).powf(0.2)
        };
        (100.0 * h0).min(h1)
    }

    /// Integrates `y' = f(x, y)` from `x0` to `x1` (either direction).
    pub fn integrate<const N: usize, F>(
        &self,
        f: F,
        x0: f64,
        x1: f64,
        y0: State<N>,
    ) -> Result<(State<N>, IntegrationStats)>
    where
        F: Fn(f64, &State<N>) -> State<N>,
    {
        let mut stats = IntegrationStats::default();
        let span = x1 - x0;
        if span == 0.0 {
            return Ok((y0, stats));
        }
        let dir = span.signum();
        let mut x = x0;
        let mut y = y0;
        let mut k1 = f(x, &y);
        let mut h = self.initial_step(&f, x0, &y0, &k1, dir);
        let h_min = 16.0 * f64::EPSILON * span.abs().max(x0.abs());

        loop {
            if stats.accepted + stats.rejected >= self.max_steps {
                return Err(Error::Stiffness {
                    steps: self.max_steps,
                });
            }
            let remaining = (x1 - x).abs();
            let last = h >= remaining;
            if last {
                h = remaining;
            }
            let hs = dir * h;

            let k2 = f(x + C2 * hs, &axpy(&y, hs, &[(A21, &k1)]));
            let k3 = f(x + C3 * hs, &axpy(&y, hs, &[(A31, &k1), (A32, &k2)]));
            let k4 = f(
                x + C4 * hs,
                &axpy(&y, hs, &[(A41, &k1), (A42, &k2), (A43, &k3)]),
            );
            let k5 = f(
                x + C5 * hs,
                &axpy(&y, hs, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
            );
            let k6 = f(
                x + hs,
                &axpy(
                    &y,
                    hs,
                    &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
                ),
            );
            let y_new = axpy(
                &y,
                hs,
                &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)],
            );
            let k7 = f(x + hs, &y_new);
            let zero = [ComplexScalar::new(0.0, 0.0); N];
            let err_vec = axpy(
                &zero,
                hs,
                &[
                    (E1, &k1),
                    (E3, &k3),
                    (E4, &k4),
                    (E5, &k5),
                    (E6, &k6),
                    (E7, &k7),
                ],
            );
            let err = self.scaled_norm(&err_vec, &y, &y_new);
            if !err.is_finite() {
                return Err(Error::NonFinite);
            }

            let fac = if err == 0.0 {
                FAC_MAX
            } else {
                (SAFETY * err.powf(-0.2)).clamp(FAC_MIN, FAC_MAX)
            };
            if err <= 1.0 {
                stats.accepted += 1;
                stats.error_sum += err * self.rtol;
                x = if last { x1 } else { x + hs };
                y = y_new;
                k1 = k7;
                if last {
                    return Ok((y, stats));
                }
                h *= fac;
            } else {
                stats.rejected += 1;
                h *= fac.min(1.0);
                if h < h_min {
                    return Err(Error::Stiffness {
                        steps: stats.accepted + stats.rejected,
                    });
                }
            }
        }
    }
}
