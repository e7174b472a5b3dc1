//! 3D conformal geometric algebra over `e1..e5`, with `e1^2 = .. = e4^2 = 1`
//! and `e5^2 = -1`.
//!
//! Null basis: `e_inf = e4 + e5`, `e_o = (e5 - e4) / 2`, so
//! `e_inf . e_o = -1`. A Euclidean point `x` embeds as
//! `x + x^2/2 e_inf + e_o`.

use super::multivector;
use crate::error::{Error, Result};
use crate::quat::{dot3, Vec3};

multivector!(
    /// Multivector of 3D CGA; see the module-level conventions table.
    Cga,
    blades = 32,
    dim = 5,
    metric = [1, 1, 1, 1, -1],
    names = [
        "1", "e1", "e2", "e3", "e4", "e5", "e12", "e13", "e14", "e15", "e23", "e24", "e25", "e34",
        "e35", "e45", "e123", "e124", "e125", "e134", "e135", "e145", "e234", "e235", "e245",
        "e345", "e1234", "e1235", "e1245", "e1345", "e2345", "e12345",
    ]
);

pub const E1: usize = 1;
pub const E2: usize = 2;
pub const E3: usize = 3;
pub const E4: usize = 4;
pub const E5: usize = 5;
pub const E12: usize = 6;
pub const E13: usize = 7;
pub const E23: usize = 10;
pub const E1234: usize = 26;
pub const E1235: usize = 27;

impl Cga {
    pub fn vector(v: [f64; 5]) -> Self {
        let mut c = [0.0; 32];
        c[E1..=E5].copy_from_slice(&v);
        Self(c)
    }

    /// `e_inf = e4 + e5`.
    pub fn infinity() -> Self {
        Self::vector([0.0, 0.0, 0.0, 1.0, 1.0])
    }

    /// `e_o = (e5 - e4) / 2`.
    pub fn origin() -> Self {
        Self::vector([0.0, 0.0, 0.0, -0.5, 0.5])
    }

    /// Null point `x + x^2/2 e_inf + e_o`.
    pub fn point(p: Vec3) -> Self {
        let h = 0.5 * dot3(p, p);
        Self::vector([p[0], p[1], p[2], h - 0.5, h + 0.5])
    }

    /// Euclidean part of a (weighted) null point, divided by its `e_o`
    /// weight `-X . e_inf = c5 - c4`.
    pub fn to_point(&self) -> Vec3 {
        let w = self.0[E5] - self.0[E4];
        [self.0[E1] / w, self.0[E2] / w, self.0[E3] / w]
    }

    pub fn sandwich(&self, x: &Self) -> Self {
        self.geometric(x).geometric(&self.reverse())
    }

    pub fn apply_to_point(&self, p: Vec3) -> Vec3 {
        self.sandwich(&Self::point(p)).to_point()
    }
}

pub fn cga_gp(m: &Cga, n: &Cga) -> Cga {
    m.geometric(n)
}

pub fn cga_reverse(m: &Cga) -> Cga {
    m.reverse()
}

/// Inner product used for translation extraction: the right contraction
/// `m ⌊ v`.
pub fn cga_inner(m: &Cga, v: &Cga) -> Cga {
    m.right_contract(v)
}

/// CGA counterpart of [`crate::ga::pga::motor_normalize`].
///
/// For an even `M` built from rigid motors, `M M~ = s + p N` with
/// `N = e_inf e123 = -(e1234 + e1235)`; `N^2 = 0` and `N` commutes with
/// the motor subalgebra, so the same correction applies.
pub fn cga_motor_normalize(m: &Cga) -> Result<Cga> {
    let mm = m.geometric(&m.reverse());
    let s = mm.0[0];
    if !(s >= super::pga::DEGENERATE_NORM_SQ) {
        return Err(Error::DegenerateBlend { norm_sq: s });
    }
    // N carries -1 on both e1234 and e1235
    let p = -0.5 * (mm.0[E1234] + mm.0[E1235]);
    let inv = 1.0 / s.sqrt();
    let mut k = Cga::scalar(inv);
    let beta = -inv * p / (2.0 * s);
    k.0[E1234] = -beta;
    k.0[E1235] = -beta;
    Ok(m.geometric(&k))
}
