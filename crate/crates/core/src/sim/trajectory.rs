use serde::{Deserialize, Serialize};

use crate::engines::{interp_dq, InterpRequest};
use crate::error::{Error, Result};
use crate::pose::Pose;
use crate::quat::Quaternion;

/// A pose the trajectory passes through at `time` seconds.
///
/// JSON shape: `{"time": s, "t": [x, y, z], "q": [qx, qy, qz, qw]}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ControlPoseRepr", into = "ControlPoseRepr")]
pub struct ControlPose {
    pub time: f64,
    pub pose: Pose,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ControlPoseRepr {
    time: f64,
    t: [f64; 3],
    q: [f64; 4],
}

impl TryFrom<ControlPoseRepr> for ControlPose {
    type Error = Error;

    fn try_from(r: ControlPoseRepr) -> Result<Self> {
        let pose = Pose::new(r.t, Quaternion::new(r.q[0], r.q[1], r.q[2], r.q[3]))?;
        Ok(Self { time: r.time, pose })
    }
}

impl From<ControlPose> for ControlPoseRepr {
    fn from(c: ControlPose) -> Self {
        Self {
            time: c.time,
            t: c.pose.t,
            q: c.pose.q.to_array(),
        }
    }
}

/// Ground-truth motion: constant-screw segments between control poses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ControlPose>", into = "Vec<ControlPose>")]
pub struct Trajectory {
    controls: Vec<ControlPose>,
}

impl Trajectory {
    pub fn new(controls: Vec<ControlPose>) -> Result<Self> {
        if controls.is_empty() {
            return Err(Error::InvalidConfig("trajectory has no control poses".into()));
        }
        if let Some(w) = controls.windows(2).find(|w| !(w[1].time > w[0].time)) {
            return Err(Error::InvalidConfig(format!(
                "trajectory times must increase strictly ({} then {})",
                w[0].time, w[1].time
            )));
        }
        if controls.iter().any(|c| !c.time.is_finite()) {
            return Err(Error::InvalidConfig("trajectory time is not finite".into()));
        }
        Ok(Self { controls })
    }

    pub fn from_poses(poses: impl IntoIterator<Item = (f64, Pose)>) -> Result<Self> {
        Self::new(
            poses
                .into_iter()
                .map(|(time, pose)| ControlPose { time, pose })
                .collect(),
        )
    }

    /// A single pose held for `duration` seconds.
    pub fn stationary(pose: Pose, duration: f64) -> Self {
        Self::from_poses([(0.0, pose), (duration, pose)]).expect("positive duration")
    }

    pub fn controls(&self) -> &[ControlPose] {
        &self.controls
    }

    pub fn start(&self) -> f64 {
        self.controls[0].time
    }

    pub fn end(&self) -> f64 {
        self.controls[self.controls.len() - 1].time
    }

    pub fn duration(&self) -> f64 {
        self.end() - self.start()
    }

    /// Ground-truth pose at `time`, clamped to the trajectory's range.
    pub fn pose_at(&self, time: f64) -> Pose {
        let c = &self.controls;
        if time <= c[0].time {
            return c[0].pose;
        }
        if time >= c[c.len() - 1].time {
            return c[c.len() - 1].pose;
        }
        // first control strictly after `time`
        let hi = c.partition_point(|k| k.time <= time);
        let (k0, k1) = (&c[hi - 1], &c[hi]);
        if k0.pose == k1.pose {
            return k0.pose;
        }
        let a = (time - k0.time) / (k1.time - k0.time);
        interp_dq(&InterpRequest {
            from: k0.pose,
            to: k1.pose,
            a,
        })
    }

    /// One-second constant screw whose rotation axis is not parallel to its
    /// translation: 120° about a tilted axis while moving 0.6 m sideways and
    /// 0.3 m up.
    pub fn screw_benchmark() -> Self {
        let to = Pose::normalized(
            [0.6, 0.1, 0.3],
            Quaternion::from_axis_angle([0.2, 1.0, 0.4], 120f64.to_radians()),
        );
        Self::from_poses([(0.0, Pose::IDENTITY), (1.0, to)]).expect("valid")
    }

    /// Hand-like path with bends every 0.2 s, so every rate in
    /// {5, 10, 15, 20, 30} puts a keyframe on each bend.
    pub fn bent_path() -> Self {
        let poses = [
            ([0.0, 0.0, 0.0], [0.0, 0.0, 1.0], 0.0),
            ([0.15, 0.05, 0.0], [0.0, 0.3, 1.0], 40.0),
            ([0.25, 0.2, 0.1], [1.0, 0.2, 0.0], 75.0),
            ([0.2, 0.35, 0.25], [0.3, 1.0, 0.2], 20.0),
            ([0.05, 0.4, 0.3], [0.0, 0.5, 1.0], -45.0),
            ([-0.1, 0.3, 0.2], [1.0, 1.0, 0.0], 10.0),
        ];
        Self::from_poses(poses.iter().enumerate().map(|(i, (t, axis, deg))| {
            (
                0.2 * i as f64,
                Pose::normalized(*t, Quaternion::from_axis_angle(*axis, f64::to_radians(*deg))),
            )
        }))
        .expect("valid")
    }
}

impl TryFrom<Vec<ControlPose>> for Trajectory {
    type Error = Error;

    fn try_from(controls: Vec<ControlPose>) -> Result<Self> {
        Self::new(controls)
    }
}

impl From<Trajectory> for Vec<ControlPose> {
    fn from(t: Trajectory) -> Self {
        t.controls
    }
}
