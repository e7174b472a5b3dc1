use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::packet::{FloatWidth, KeyframePacket, PAYLOAD_VALUES};
use super::trajectory::Trajectory;
use crate::error::{Error, Result};
use crate::pose::Pose;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelConfig {
    pub updates_per_sec: f64,
    pub float_width: FloatWidth,
    /// One-way delay in seconds.
    pub latency: f64,
    pub drop_prob: f64,
    pub seed: u64,
    pub users: u32,
}

impl Default for ChannelConfig {
    fn default() -> Self {
        Self {
            updates_per_sec: 20.0,
            float_width: FloatWidth::F64,
            latency: 0.0,
            drop_prob: 0.0,
            seed: 0,
            users: 1,
        }
    }
}

impl ChannelConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.updates_per_sec > 0.0 && self.updates_per_sec.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "updates_per_sec must be positive, got {}",
                self.updates_per_sec
            )));
        }
        if !(0.0..=1.0).contains(&self.drop_prob) {
            return Err(Error::InvalidConfig(format!(
                "drop_prob must lie in [0, 1], got {}",
                self.drop_prob
            )));
        }
        if !(self.latency >= 0.0 && self.latency.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "latency must be nonnegative, got {}",
                self.latency
            )));
        }
        if self.users == 0 {
            return Err(Error::InvalidConfig("users must be at least 1".into()));
        }
        Ok(())
    }

    /// Displacement payload bandwidth over all users:
    /// `updates_per_sec x 7 x float_width x users`.
    pub fn bytes_per_sec(&self) -> f64 {
        self.updates_per_sec
            * PAYLOAD_VALUES as f64
            * self.float_width.bytes() as f64
            * f64::from(self.users)
    }

    pub fn keyframe_interval(&self) -> f64 {
        1.0 / self.updates_per_sec
    }
}

/// A packet as seen by the receiver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arrival {
    pub t_arrive: f64,
    pub packet: KeyframePacket,
}

/// Samples the trajectory every `1 / updates_per_sec` seconds from its
/// start, including a packet exactly at its end. Payloads are rounded to
/// the configured float width.
pub fn sample_keyframes(traj: &Trajectory, cfg: &ChannelConfig) -> Vec<KeyframePacket> {
    let start = traj.start();
    let rate = cfg.updates_per_sec;
    let full = (traj.duration() * rate + 1e-9).floor() as u32;
    let mut times: Vec<f64> = (0..=full).map(|j| start + f64::from(j) / rate).collect();
    if traj.end() - times[times.len() - 1] > 1e-9 {
        times.push(traj.end());
    }
    times
        .into_iter()
        .enumerate()
        .map(|(seq, t)| {
            let pose = quantize_pose(&traj.pose_at(t), cfg.float_width);
            KeyframePacket::new(seq as u32, t, &pose)
        })
        .collect()
}

fn quantize_pose(p: &Pose, width: FloatWidth) -> Pose {
    match width {
        FloatWidth::F64 => *p,
        FloatWidth::F32 => {
            let v = p.to_payload().map(|c| width.quantize(c));
            Pose::from_payload(v).expect("f32 rounding keeps the quaternion unit")
        }
    }
}

/// Delays each packet by the latency and drops it with probability
/// `drop_prob`, one draw per packet from a generator seeded with `seed`.
pub fn channel_pass(packets: &[KeyframePacket], cfg: &ChannelConfig) -> Vec<Arrival> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    packets
        .iter()
        .filter(|_| rng.random::<f64>() >= cfg.drop_prob)
        .map(|p| Arrival {
            t_arrive: p.t_send + cfg.latency,
            packet: *p,
        })
        .collect()
}
