//! 3D projective geometric algebra, signature `e0^2 = 0`, `e1^2 = e2^2 = e3^2 = 1`.

use super::multivector;
use crate::error::{Error, Result};
use crate::quat::Vec3;

multivector!(
    /// Multivector of 3D PGA; see the module-level conventions table.
    Pga,
    blades = 16,
    dim = 4,
    metric = [0, 1, 1, 1],
    names = [
        "1", "e0", "e1", "e2", "e3", "e01", "e02", "e03", "e12", "e13", "e23", "e012", "e013",
        "e023", "e123", "e0123",
    ]
);

pub const E0: usize = 1;
pub const E01: usize = 5;
pub const E02: usize = 6;
pub const E03: usize = 7;
pub const E12: usize = 8;
pub const E13: usize = 9;
pub const E23: usize = 10;
pub const E012: usize = 11;
pub const E013: usize = 12;
pub const E023: usize = 13;
pub const E123: usize = 14;
pub const E0123: usize = 15;

/// Below this `<M M~>_0` a blended motor is considered collapsed.
pub const DEGENERATE_NORM_SQ: f64 = 1e-12;

impl Pga {
    /// Embeds a Euclidean point as the trivector
    /// `e123 + x e032 + y e013 + z e021`.
    pub fn point(p: Vec3) -> Self {
        let mut c = [0.0; 16];
        c[E123] = 1.0;
        c[E023] = -p[0];
        c[E013] = p[1];
        c[E012] = -p[2];
        Self(c)
    }

    /// Inverse of [`Pga::point`] for a finite (weighted) point.
    pub fn to_point(&self) -> Vec3 {
        let w = self.0[E123];
        [-self.0[E023] / w, self.0[E013] / w, -self.0[E012] / w]
    }

    /// Sandwich `M X M~`.
    pub fn sandwich(&self, x: &Self) -> Self {
        self.geometric(x).geometric(&self.reverse())
    }

    pub fn apply_to_point(&self, p: Vec3) -> Vec3 {
        self.sandwich(&Self::point(p)).to_point()
    }
}

pub fn pga_gp(m: &Pga, n: &Pga) -> Pga {
    m.geometric(n)
}

pub fn pga_reverse(m: &Pga) -> Pga {
    m.reverse()
}

/// Rescales a (blend of) motor(s) so that `M M~ = 1`.
///
/// `M M~ = s + p e0123` for any even `M`; multiplying by
/// `(1/sqrt s)(1 - p/(2s) e0123)` clears both the scale and the
/// pseudoscalar defect, since `e0123` squares to zero and commutes with
/// the even subalgebra.
pub fn motor_normalize(m: &Pga) -> Result<Pga> {
    let mm = m.geometric(&m.reverse());
    let s = mm.0[0];
    if !(s >= DEGENERATE_NORM_SQ) {
        return Err(Error::DegenerateBlend { norm_sq: s });
    }
    let p = mm.0[E0123];
    let inv = 1.0 / s.sqrt();
    let mut k = Pga::scalar(inv);
    k.0[E0123] = -inv * p / (2.0 * s);
    Ok(m.geometric(&k))
}
