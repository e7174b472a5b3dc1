use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::quat::{add3, norm3, sub3, Quaternion, Vec3};

/// Rigid displacement: rotate by `q`, then translate by `t` (meters).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PoseRepr", into = "PoseRepr")]
pub struct Pose {
    pub t: Vec3,
    pub q: Quaternion,
}

impl Pose {
    pub const IDENTITY: Self = Self {
        t: [0.0; 3],
        q: Quaternion::IDENTITY,
    };

    /// Builds a pose with the rotation sign canonicalized; rejects non-unit
    /// rotations.
    pub fn new(t: Vec3, q: Quaternion) -> Result<Self> {
        q.ensure_unit()?;
        Ok(Self { t, q: q.canonical() })
    }

    /// As [`Pose::new`] but renormalizes `q` instead of rejecting it.
    pub fn normalized(t: Vec3, q: Quaternion) -> Self {
        Self {
            t,
            q: q.normalize().canonical(),
        }
    }

    pub fn from_translation(t: Vec3) -> Self {
        Self {
            t,
            q: Quaternion::IDENTITY,
        }
    }

    pub fn from_rotation(q: Quaternion) -> Self {
        Self::normalized([0.0; 3], q)
    }

    pub fn transform_point(&self, p: Vec3) -> Vec3 {
        add3(self.q.rotate_unchecked(p), self.t)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self::normalized(self.transform_point(other.t), self.q * other.q)
    }

    pub fn inverse(&self) -> Self {
        let qi = self.q.conjugate();
        let t = qi.rotate_unchecked(self.t);
        Self::normalized([-t[0], -t[1], -t[2]], qi)
    }

    pub fn translation_error(&self, other: &Self) -> f64 {
        norm3(sub3(self.t, other.t))
    }

    /// Rotation angle (radians) between the two orientations.
    pub fn angular_error(&self, other: &Self) -> f64 {
        self.q.angle_to(&other.q)
    }

    /// Max coefficient difference over `t` and the canonicalized `q`.
    pub fn max_component_diff(&self, other: &Self) -> f64 {
        let a = self.q.canonical().to_array();
        let b = other.q.canonical().to_array();
        let dt = (0..3).map(|i| (self.t[i] - other.t[i]).abs());
        let dq = (0..4).map(|i| (a[i] - b[i]).abs());
        dt.chain(dq).fold(0.0, f64::max)
    }

    /// Wire order `(t1, t2, t3, qx, qy, qz, qw)`.
    pub fn to_payload(&self) -> [f64; 7] {
        [
            self.t[0], self.t[1], self.t[2], self.q.x, self.q.y, self.q.z, self.q.w,
        ]
    }

    pub fn from_payload(v: [f64; 7]) -> Result<Self> {
        Self::new([v[0], v[1], v[2]], Quaternion::new(v[3], v[4], v[5], v[6]))
    }
}

impl Default for Pose {
    fn default() -> Self {
        Self::IDENTITY
    }
}

/// JSON shape: `{"t": [x, y, z], "q": [qx, qy, qz, qw]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PoseRepr {
    t: Vec3,
    q: [f64; 4],
}

impl TryFrom<PoseRepr> for Pose {
    type Error = crate::error::Error;

    fn try_from(r: PoseRepr) -> Result<Self> {
        Pose::new(r.t, Quaternion::new(r.q[0], r.q[1], r.q[2], r.q[3]))
    }
}

impl From<Pose> for PoseRepr {
    fn from(p: Pose) -> Self {
        PoseRepr {
            t: p.t,
            q: p.q.to_array(),
        }
    }
}
