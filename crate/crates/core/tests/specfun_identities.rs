use std::f64::consts::PI;

use kgscatter_core::specfun::hyp2f1::{inversion, pfaff, series};
use kgscatter_core::{hyp2f1, log_gamma, ComplexScalar, Error};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

fn rel(a: ComplexScalar, b: ComplexScalar) -> f64 {
    (a - b).norm() / b.norm()
}

/// Independent log-Gamma: shift up with the recurrence, then Stirling.
/// Valid off the negative real axis, and on the principal branch there.
fn stirling_log_gamma(mut z: ComplexScalar) -> ComplexScalar {
    let mut shift = c(0.0, 0.0);
    while z.re < 20.0 {
        shift += z.ln();
        z += 1.0;
    }
    const BERN: [f64; 6] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
    ];
    let mut corr = c(0.0, 0.0);
    let mut zp = z;
    for (k, b) in BERN.iter().enumerate() {
        let n = 2.0 * (k + 1) as f64;
        corr += *b / (n * (n - 1.0) * zp);
        zp *= z * z;
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + corr - shift
}

fn brute_series(
    p: ComplexScalar,
    q: ComplexScalar,
    cc: ComplexScalar,
    z: f64,
    terms: usize,
) -> ComplexScalar {
    let mut term = c(1.0, 0.0);
    let mut sum = term;
    for n in 0..terms {
        let k = n as f64;
        term = term * (p + k) * (q + k) / ((cc + k) * (k + 1.0)) * z;
        sum += term;
    }
    sum
}

fn off_pole(z: ComplexScalar) -> bool {
    z.im.abs() > 0.05 || z.re > 0.05 || (z.re - z.re.round()).abs() > 0.05
}

fn complex_in(
    re: std::ops::Range<f64>,
    im: std::ops::Range<f64>,
) -> impl Strategy<Value = ComplexScalar> {
    (re, im).prop_map(|(a, b)| c(a, b))
}

fn non_integer_difference(p: ComplexScalar, q: ComplexScalar) -> bool {
    let d = p - q;
    d.im.abs() > 0.1 || (d.re - d.re.round()).abs() > 0.1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn gamma_recurrence(z in complex_in(-20.0..20.0, -20.0..20.0)) {
        prop_assume!(z.norm() <= 20.0 && off_pole(z));
        let ratio = (log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap()).exp();
        prop_assert!((ratio - z).norm() <= 1e-10 * z.norm(), "z = {}", z);
    }

    #[test]
    fn gamma_reflection(z in complex_in(-10.0..10.0, -10.0..10.0)) {
        prop_assume!((z.re - z.re.round()).abs() > 0.01 || z.im.abs() > 0.01);
        let lhs = (log_gamma(z).unwrap() + log_gamma(1.0 - z).unwrap()).exp();
        let rhs = PI / (PI * z).sin();
        prop_assert!(rel(lhs, rhs) <= 1e-10, "z = {}", z);
    }

    #[test]
    fn gamma_modulus_on_imaginary_axis(y in 0.1f64..10.0) {
        let g2 = (2.0 * log_gamma(c(0.0, y)).unwrap().re).exp();
        let want = PI / (y * (PI * y).sinh());
        prop_assert!((g2 - want).abs() <= 1e-10 * want);
    }

    #[test]
    fn gamma_principal_branch(z in complex_in(-30.0..30.0, -30.0..30.0)) {
        prop_assume!(z.im.abs() > 1e-3 || z.re > 0.0);
        let got = log_gamma(z).unwrap();
        let want = stirling_log_gamma(z);
        prop_assert!((got - want).norm() <= 1e-10 * want.norm().max(1.0), "z = {}: {} vs {}", z, got, want);
    }

    #[test]
    fn series_and_pfaff_agree(
        p in complex_in(-2.0..2.0, -2.0..2.0),
        q in complex_in(-2.0..2.0, -2.0..2.0),
        cc in complex_in(0.5..3.0, -2.0..2.0),
        z in -0.6f64..-0.4,
    ) {
        let z = c(z, 0.0);
        let a = series(p, q, cc, z).unwrap();
        let b = pfaff(p, q, cc, z).unwrap();
        prop_assert!(rel(a, b) <= 1e-10, "{} vs {}", a, b);
    }

    #[test]
    fn pfaff_and_inversion_agree(
        p in complex_in(-2.0..2.0, -2.0..2.0),
        q in complex_in(-2.0..2.0, -2.0..2.0),
        cc in complex_in(0.5..3.0, -2.0..2.0),
        z in -2.2f64..-1.8,
    ) {
        prop_assume!(non_integer_difference(p, q));
        let z = c(z, 0.0);
        let a = pfaff(p, q, cc, z).unwrap();
        let b = inversion(p, q, cc, z).unwrap();
        prop_assert!(rel(a, b) <= 1e-9, "{} vs {}", a, b);
    }

    #[test]
    fn euler_pfaff_identity(
        p in complex_in(-2.0..2.0, -2.0..2.0),
        q in complex_in(-2.0..2.0, -2.0..2.0),
        cc in complex_in(0.5..3.0, -2.0..2.0),
        z in -5.0f64..0.0,
    ) {
        prop_assume!(non_integer_difference(p, q) && non_integer_difference(p, cc - q));
        let zc = c(z, 0.0);
        let lhs = hyp2f1(p, q, cc, zc).unwrap();
        let w = zc / (zc - 1.0);
        let rhs = (-p * (1.0 - zc).ln()).exp() * series(p, cc - q, cc, w).unwrap();
        prop_assert!(rel(lhs, rhs) <= 1e-10, "{} vs {}", lhs, rhs);
    }
}

#[test]
fn inversion_route_matches_brute_force_pfaff_series() {
    let (p, q, cc) = (c(0.3, 0.2), c(1.1, -0.4), c(0.9, 0.1));
    let z = -3.0;
    let w = z / (z - 1.0);
    assert!((w - 0.75f64).abs() < 1e-15);
    let want = (-p * (1.0f64 - z).ln()).exp() * brute_series(p, cc - q, cc, w, 400);
    let got = hyp2f1(p, q, cc, c(z, 0.0)).unwrap();
    assert!(rel(got, want) <= 1e-10, "{got} vs {want}");
}

#[test]
fn series_matches_brute_force() {
    let (p, q, cc) = (c(0.5, 4.98), c(0.5, 6.39), c(1.0, 6.48));
    for z in [-0.1, -0.3, -0.5] {
        let want = brute_series(p, q, cc, z, 300);
        let got = hyp2f1(p, q, cc, c(z, 0.0)).unwrap();
        assert!(rel(got, want) <= 1e-12, "z = {z}");
    }
}

#[test]
fn degenerate_inversion_is_an_error() {
    let r = hyp2f1(c(0.5, 0.3), c(2.5, 0.3), c(1.2, 0.0), c(-4.0, 0.0));
    assert!(matches!(r, Err(Error::DegenerateTransform { .. })));
}
