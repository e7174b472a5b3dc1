//! Hamilton quaternions stored as `(x, y, z, w)` = `x i + y j + z k + w`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest deviation of `|q|` from 1 accepted where a rotation is expected.
pub const UNIT_TOLERANCE: f64 = 1e-6;

pub type Vec3 = [f64; 3];

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub w: f64,
}

impl Quaternion {
    pub const IDENTITY: Self = Self::new(0.0, 0.0, 0.0, 1.0);
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64, w: f64) -> Self {
        Self { x, y, z, w }
    }

    /// Pure quaternion `v.x i + v.y j + v.z k`.
    pub const fn pure(v: Vec3) -> Self {
        Self::new(v[0], v[1], v[2], 0.0)
    }

    /// Rotation by `angle` radians about `axis` (need not be normalized).
    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Self {
        let n = norm3(axis);
        if n == 0.0 {
            return Self::IDENTITY;
        }
        let (s, c) = (angle * 0.5).sin_cos();
        let k = s / n;
        Self::new(axis[0] * k, axis[1] * k, axis[2] * k, c)
    }

    pub fn vector(&self) -> Vec3 {
        [self.x, self.y, self.z]
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    pub fn dot(&self, o: &Self) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z + self.w * o.w
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(-self.x, -self.y, -self.z, self.w)
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(self.x * k, self.y * k, self.z * k, self.w * k)
    }

    pub fn normalize(&self) -> Self {
        self.scale(1.0 / self.norm())
    }

    pub fn inverse(&self) -> Self {
        self.conjugate().scale(1.0 / self.norm_sq())
    }

    pub fn is_unit(&self) -> bool {
        (self.norm() - 1.0).abs() <= UNIT_TOLERANCE
    }

    pub fn ensure_unit(&self) -> Result<()> {
        if self.is_unit() {
            Ok(())
        } else {
            Err(Error::NonUnitInput { norm: self.norm() })
        }
    }

    /// Sign representative with `w > 0`, or when `w == 0` the first
    /// nonzero of `x, y, z` positive.
    pub fn canonical(&self) -> Self {
        let flip = if self.w != 0.0 {
            self.w < 0.0
        } else {
            [self.x, self.y, self.z]
                .into_iter()
                .find(|c| *c != 0.0)
                .is_some_and(|c| c < 0.0)
        };
        if flip { -*self } else { *self }
    }

    /// Rotation angle in `[0, pi]` of the unit quaternion, sign-insensitive.
    pub fn angle(&self) -> f64 {
        2.0 * norm3(self.vector()).atan2(self.w.abs())
    }

    /// Angle of the rotation taking `self` to `other`.
    pub fn angle_to(&self, other: &Self) -> f64 {
        (self.conjugate() * *other).angle()
    }

    /// Rotates `p` by the sandwich `q p q*`.
    pub fn rotate_point(&self, p: Vec3) -> Result<Vec3> {
        self.ensure_unit()?;
        Ok(self.rotate_unchecked(p))
    }

    pub(crate) fn rotate_unchecked(&self, p: Vec3) -> Vec3 {
        // v + 2w (u x v) + 2 u x (u x v)
        let u = self.vector();
        let uv = cross(u, p);
        let uuv = cross(u, uv);
        [
            p[0] + 2.0 * (self.w * uv[0] + uuv[0]),
            p[1] + 2.0 * (self.w * uv[1] + uuv[1]),
            p[2] + 2.0 * (self.w * uv[2] + uuv[2]),
        ]
    }

    /// Real power of a unit quaternion, `exp(a log q)`.
    pub fn powf(&self, a: f64) -> Self {
        let vn = norm3(self.vector());
        let half = vn.atan2(self.w);
        if vn == 0.0 {
            if self.w >= 0.0 {
                return Self::IDENTITY;
            }
            // -1 is a full turn about an arbitrary axis.
            let (s, c) = (std::f64::consts::PI * a).sin_cos();
            return Self::new(s, 0.0, 0.0, c);
        }
        let (s, c) = (half * a).sin_cos();
        let k = s / vn;
        Self::new(self.x * k, self.y * k, self.z * k, c)
    }

    /// Spherical interpolation `q (q^-1 r)^a` along the shorter arc.
    pub fn slerp(&self, r: &Self, a: f64) -> Result<Self> {
        self.ensure_unit()?;
        r.ensure_unit()?;
        Ok(self.slerp_unchecked(r, a))
    }

    pub(crate) fn slerp_unchecked(&self, r: &Self, a: f64) -> Self {
        let r = if self.dot(r) < 0.0 { -*r } else { *r };
        if a == 0.0 {
            return *self;
        }
        if a == 1.0 {
            return r;
        }
        *self * (self.conjugate() * r).powf(a)
    }
}

impl Mul for Quaternion {
    type Output = Self;

    fn mul(self, b: Self) -> Self {
        let a = self;
        Self::new(
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        )
    }
}

impl Add for Quaternion {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z, self.w + o.w)
    }
}

impl Sub for Quaternion {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z, self.w - o.w)
    }
}

impl Neg for Quaternion {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

pub fn quat_mul(a: Quaternion, b: Quaternion) -> Quaternion {
    a * b
}

pub fn quat_rotate_point(q: Quaternion, p: Vec3) -> Result<Vec3> {
    q.rotate_point(p)
}

pub fn quat_slerp(q: Quaternion, r: Quaternion, a: f64) -> Result<Quaternion> {
    q.slerp(&r, a)
}

pub(crate) fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn dot3(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm3(a: Vec3) -> f64 {
    dot3(a, a).sqrt()
}

pub(crate) fn sub3(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn add3(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub(crate) fn scale3(a: Vec3, k: f64) -> Vec3 {
    [a[0] * k, a[1] * k, a[2] * k]
}

pub(crate) fn lerp3(a: Vec3, b: Vec3, t: f64) -> Vec3 {
    [
        (1.0 - t) * a[0] + t * b[0],
        (1.0 - t) * a[1] + t * b[1],
        (1.0 - t) * a[2] + t * b[2],
    ]
}
