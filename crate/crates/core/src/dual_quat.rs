//! Dual quaternions `A + eps B` with `eps^2 = 0`.
//!
//! A rigid transform "rotate by `q`, then translate by `t`" is encoded as
//! `(1 + eps t/2) q`, so `A = q` and `B = t q / 2`. The translation is
//! recovered as `t = 2 B A*`.

use std::ops::{Mul, Neg};

use crate::error::Result;
use crate::quat::{dot3, norm3, scale3, Quaternion, Vec3};

/// Below this rotation angle a screw is treated as a pure translation.
pub const SCREW_ANGLE_EPS: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualQuaternion {
    pub real: Quaternion,
    pub dual: Quaternion,
}

impl DualQuaternion {
    pub const IDENTITY: Self = Self::new(Quaternion::IDENTITY, Quaternion::ZERO);

    pub const fn new(real: Quaternion, dual: Quaternion) -> Self {
        Self { real, dual }
    }

    pub fn from_rotation(q: Quaternion) -> Self {
        Self::new(q, Quaternion::ZERO)
    }

    pub fn from_translation(t: Vec3) -> Self {
        Self::new(Quaternion::IDENTITY, Quaternion::pure(scale3(t, 0.5)))
    }

    /// Quaternion conjugate applied to both parts; the inverse of a unit DQ.
    pub fn conjugate(&self) -> Self {
        Self::new(self.real.conjugate(), self.dual.conjugate())
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(self.real.scale(k), self.dual.scale(k))
    }

    /// `|A| = 1` and `A . B = 0` within `tol`.
    pub fn is_unit_within(&self, tol: f64) -> bool {
        (self.real.norm() - 1.0).abs() <= tol && self.real.dot(&self.dual).abs() <= tol
    }

    /// Projects onto the unit dual quaternions.
    pub fn normalize(&self) -> Self {
        let n = self.real.norm();
        let real = self.real.scale(1.0 / n);
        let dual = self.dual.scale(1.0 / n);
        Self::new(real, dual - real.scale(real.dot(&dual)))
    }

    pub fn translation(&self) -> Vec3 {
        (self.dual * self.real.conjugate()).scale(2.0).vector()
    }

    /// Full sandwich `d (1 + eps p) d^dagger` with `d^dagger = A* - eps B*`.
    pub fn transform_point(&self, p: Vec3) -> Vec3 {
        let point = Self::new(Quaternion::IDENTITY, Quaternion::pure(p));
        let dagger = Self::new(self.real.conjugate(), -self.dual.conjugate());
        let out = *self * point * dagger;
        out.dual.vector()
    }

    /// Screw power `d^a` of a unit dual quaternion.
    ///
    /// With `d = cos(th/2) + sin(th/2) l` over dual numbers
    /// (`th = theta + eps pitch`, `l = axis + eps moment`), `d^a` scales
    /// both the angle and the pitch by `a`.
    pub fn powf(&self, a: f64) -> Self {
        let v0 = self.real.vector();
        let w0 = self.real.w;
        let s = norm3(v0);
        let half = s.atan2(w0);

        if 2.0 * s < SCREW_ANGLE_EPS {
            let real = self.real.powf(a);
            let t = scale3(self.translation(), a);
            return Self::new(real, Quaternion::pure(scale3(t, 0.5)) * real);
        }

        let axis = scale3(v0, 1.0 / s);
        let ve = self.dual.vector();
        let pitch = -2.0 * self.dual.w / s;
        let moment = scale3(
            [
                ve[0] - axis[0] * 0.5 * pitch * w0,
                ve[1] - axis[1] * 0.5 * pitch * w0,
                ve[2] - axis[2] * 0.5 * pitch * w0,
            ],
            1.0 / s,
        );

        let (sh, ch) = (half * a).sin_cos();
        let hp = 0.5 * pitch * a;
        let real = Quaternion::new(axis[0] * sh, axis[1] * sh, axis[2] * sh, ch);
        let dual = Quaternion::new(
            sh * moment[0] + hp * ch * axis[0],
            sh * moment[1] + hp * ch * axis[1],
            sh * moment[2] + hp * ch * axis[2],
            -hp * sh,
        );
        Self::new(real, dual)
    }

    /// Screw parameters `(angle, pitch)`; pitch is translation along the axis.
    pub fn screw_angle_pitch(&self) -> (f64, f64) {
        let s = norm3(self.real.vector());
        let angle = 2.0 * s.atan2(self.real.w);
        if 2.0 * s < SCREW_ANGLE_EPS {
            return (angle, norm3(self.translation()));
        }
        let axis = scale3(self.real.vector(), 1.0 / s);
        (angle, dot3(self.translation(), axis))
    }

    /// Screw interpolation `self (self^-1 other)^a` along the shorter path.
    pub fn sclerp(&self, other: &Self, a: f64) -> Self {
        let mut delta = self.conjugate() * *other;
        if delta.real.w < 0.0 {
            delta = -delta;
        }
        if a == 0.0 {
            return *self;
        }
        if a == 1.0 {
            return *self * delta;
        }
        *self * delta.powf(a)
    }
}

impl Mul for DualQuaternion {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        Self::new(self.real * o.real, self.real * o.dual + self.dual * o.real)
    }
}

impl Neg for DualQuaternion {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

pub fn dq_mul(a: DualQuaternion, b: DualQuaternion) -> DualQuaternion {
    a * b
}

pub fn dq_pow(d: DualQuaternion, a: f64) -> DualQuaternion {
    d.powf(a)
}

/// Checked variant of [`DualQuaternion::transform_point`].
pub fn dq_apply(d: &DualQuaternion, p: Vec3) -> Result<Vec3> {
    d.real.ensure_unit()?;
    Ok(d.transform_point(p))
}
