//! Pairwise keyframe interpolation engines with a common contract:
//! `(from, to, a) -> Pose`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codec::{
    cga_motor_to_pose, dq_to_pga_motor, pga_motor_to_dq, pga_motor_to_pose,
    pose_to_cga_motor, pose_to_dq, pose_to_pga_motor,
};
use crate::error::{Error, Result};
use crate::ga::cga::cga_motor_normalize;
use crate::ga::pga::motor_normalize;
use crate::pose::Pose;
use crate::quat::lerp3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EngineKind {
    /// Vector LERP + quaternion SLERP.
    Baseline,
    /// Dual-quaternion ScLERP.
    DualQuat,
    /// Normalized LERP of 3D PGA motors.
    MotorLerpPGA,
    /// Normalized LERP of 3D CGA motors.
    MotorLerpCGA,
    /// Screw interpolation of PGA motors.
    MotorSlerp,
}

impl EngineKind {
    pub const ALL: [EngineKind; 5] = [
        EngineKind::Baseline,
        EngineKind::DualQuat,
        EngineKind::MotorLerpPGA,
        EngineKind::MotorLerpCGA,
        EngineKind::MotorSlerp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            EngineKind::Baseline => "Baseline",
            EngineKind::DualQuat => "DualQuat",
            EngineKind::MotorLerpPGA => "MotorLerpPGA",
            EngineKind::MotorLerpCGA => "MotorLerpCGA",
            EngineKind::MotorSlerp => "MotorSlerp",
        }
    }

    /// Identical keyframes come back unchanged, so a static stream renders
    /// without roundoff.
    pub fn interpolate(&self, r: &InterpRequest) -> Result<Pose> {
        if r.from == r.to {
            return Ok(r.from);
        }
        match self {
            EngineKind::Baseline => Ok(interp_baseline(r)),
            EngineKind::DualQuat => Ok(interp_dq(r)),
            EngineKind::MotorLerpPGA => interp_motor_lerp(r, MotorAlgebra::Pga),
            EngineKind::MotorLerpCGA => interp_motor_lerp(r, MotorAlgebra::Cga),
            EngineKind::MotorSlerp => Ok(interp_motor_slerp(r)),
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EngineKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown engine `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotorAlgebra {
    Pga,
    Cga,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpRequest {
    pub from: Pose,
    pub to: Pose,
    pub a: f64,
}

impl InterpRequest {
    pub fn new(from: Pose, to: Pose, a: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::InvalidConfig(format!(
                "interpolation parameter {a} outside [0, 1]"
            )));
        }
        from.q.ensure_unit()?;
        to.q.ensure_unit()?;
        Ok(Self { from, to, a })
    }
}

pub fn interp_baseline(r: &InterpRequest) -> Pose {
    let t = lerp3(r.from.t, r.to.t, r.a);
    let q = r.from.q.slerp_unchecked(&r.to.q, r.a);
    Pose::normalized(t, q)
}

/// `d1 (d1^-1 d2)^a`, decomposed back into a pose.
pub fn interp_dq(r: &InterpRequest) -> Pose {
    let (d1, d2) = dq_pair(r);
    let d = d1.sclerp(&d2, r.a);
    Pose::normalized(d.translation(), d.real)
}

fn dq_pair(r: &InterpRequest) -> (crate::DualQuaternion, crate::DualQuaternion) {
    // Poses are validated unit on construction of the request.
    let d1 = pose_to_dq(&r.from).expect("unit rotation");
    let d2 = pose_to_dq(&r.to).expect("unit rotation");
    (d1, d2)
}

/// Normalized blend `(1 - a) M1 + a M2` of the endpoint motors, with `M2`
/// sign-flipped onto the near side of `M1`.
pub fn interp_motor_lerp(r: &InterpRequest, algebra: MotorAlgebra) -> Result<Pose> {
    let a = r.a;
    match algebra {
        MotorAlgebra::Pga => {
            let m1 = pose_to_pga_motor(&r.from)?;
            let mut m2 = pose_to_pga_motor(&r.to)?;
            if (m1 * m2.reverse()).scalar_part() < 0.0 {
                m2 = -m2;
            }
            let m = motor_normalize(&(m1 * (1.0 - a) + m2 * a))?;
            pga_motor_to_pose(&m)
        }
        MotorAlgebra::Cga => {
            let m1 = pose_to_cga_motor(&r.from)?;
            let mut m2 = pose_to_cga_motor(&r.to)?;
            if (m1 * m2.reverse()).scalar_part() < 0.0 {
                m2 = -m2;
            }
            let m = cga_motor_normalize(&(m1 * (1.0 - a) + m2 * a))?;
            cga_motor_to_pose(&m)
        }
    }
}

/// Screw interpolation of PGA motors, carried out on the isomorphic dual
/// quaternions.
pub fn interp_motor_slerp(r: &InterpRequest) -> Pose {
    let m1 = pose_to_pga_motor(&r.from).expect("unit rotation");
    let m2 = pose_to_pga_motor(&r.to).expect("unit rotation");
    let d = pga_motor_to_dq(&m1).sclerp(&pga_motor_to_dq(&m2), r.a);
    let m = dq_to_pga_motor(&d);
    pga_motor_to_pose(&m).expect("screw of motors is a motor")
}

/// Positional gap between motor LERP and motor SLERP for one body-frame
/// probe point, sampled at `a = k / (intermediates + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerpSlerpDeviation {
    pub max_deviation: f64,
    /// Polyline length of the probe under SLERP.
    pub path_length: f64,
}

impl LerpSlerpDeviation {
    pub fn ratio(&self) -> f64 {
        if self.path_length > 0.0 {
            self.max_deviation / self.path_length
        } else {
            0.0
        }
    }
}

pub fn lerp_slerp_deviation(
    from: &Pose,
    to: &Pose,
    intermediates: usize,
    probe: crate::Vec3,
) -> Result<LerpSlerpDeviation> {
    let steps = intermediates + 1;
    let mut max_deviation = 0.0f64;
    let mut path_length = 0.0;
    let mut prev: Option<crate::Vec3> = None;
    for k in 0..=steps {
        let r = InterpRequest::new(*from, *to, k as f64 / steps as f64)?;
        let lerp = interp_motor_lerp(&r, MotorAlgebra::Pga)?.transform_point(probe);
        let slerp = interp_motor_slerp(&r).transform_point(probe);
        max_deviation = max_deviation.max(crate::quat::norm3(crate::quat::sub3(lerp, slerp)));
        if let Some(p) = prev {
            path_length += crate::quat::norm3(crate::quat::sub3(slerp, p));
        }
        prev = Some(slerp);
    }
    Ok(LerpSlerpDeviation {
        max_deviation,
        path_length,
    })
}
