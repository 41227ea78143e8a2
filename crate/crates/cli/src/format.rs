use kgscatter_core::{Classification, ComplexScalar};

/// 17 significant digits, round-trips through `f64::from_str`.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn complex(z: ComplexScalar) -> String {
    format!("{:.16e}{:+.16e}i", z.re, z.im)
}

pub fn region(c: &Classification) -> String {
    if c.mirrored {
        format!("{}_mirrored", c.region.label())
    } else {
        c.region.label().to_string()
    }
}
