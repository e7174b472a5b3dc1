//! JSON scenario files.
//!
//! ```json
//! {
//!   "trajectory": [
//!     {"time": 0.0, "t": [0, 0, 0], "q": [0, 0, 0, 1]},
//!     {"time": 1.0, "t": [1, 0, 0], "q": [0, 0, 0.7071067811865476, 0.7071067811865476]}
//!   ],
//!   "engines": ["MotorLerpPGA", "MotorSlerp"],
//!   "updates_per_sec": [1],
//!   "render_rate_hz": 21,
//!   "channel": {"latency_s": 0.0, "drop_prob": 0.0, "float_width_bytes": 8},
//!   "seed": 7,
//!   "users": 1
//! }
//! ```
//!
//! `channel`, `seed` and `users` are optional (defaults: lossless
//! zero-latency 8-byte channel, seed 0, one user). Unknown keys are errors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engines::EngineKind;
use crate::sim::{ChannelConfig, FloatWidth, Scenario, Trajectory};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub trajectory: Trajectory,
    pub engines: Vec<EngineKind>,
    pub updates_per_sec: Vec<f64>,
    pub render_rate_hz: f64,
    #[serde(default)]
    pub channel: ChannelSection,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "one_user")]
    pub users: u32,
}

fn one_user() -> u32 {
    1
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSection {
    #[serde(default)]
    pub latency_s: f64,
    #[serde(default)]
    pub drop_prob: f64,
    #[serde(default)]
    pub float_width_bytes: FloatWidth,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ScenarioError {
    /// Syntax or shape error reported by the JSON parser.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed document with an out-of-range value.
    Invalid { key: String, message: String },
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioError::Parse {
                line,
                column,
                message,
            } => write!(f, "scenario line {line}, column {column}: {message}"),
            ScenarioError::Invalid { key, message } => {
                write!(f, "scenario key `{key}`: {message}")
            }
        }
    }
}

impl std::error::Error for ScenarioError {}

fn invalid(key: &str, message: impl Into<String>) -> ScenarioError {
    ScenarioError::Invalid {
        key: key.to_string(),
        message: message.into(),
    }
}

impl ScenarioFile {
    pub fn from_json(text: &str) -> Result<Self, ScenarioError> {
        let file: ScenarioFile =
            serde_json::from_str(text).map_err(|e| ScenarioError::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
        file.validate()?;
        Ok(file)
    }

    pub fn validate(&self) -> Result<(), ScenarioError> {
        if self.engines.is_empty() {
            return Err(invalid("engines", "at least one engine is required"));
        }
        if self.updates_per_sec.is_empty() {
            return Err(invalid("updates_per_sec", "at least one rate is required"));
        }
        if let Some(r) = self
            .updates_per_sec
            .iter()
            .find(|r| !(**r > 0.0 && r.is_finite()))
        {
            return Err(invalid("updates_per_sec", format!("rate {r} is not positive")));
        }
        if !(self.render_rate_hz > 0.0 && self.render_rate_hz.is_finite()) {
            return Err(invalid("render_rate_hz", "must be positive"));
        }
        if !(0.0..=1.0).contains(&self.channel.drop_prob) {
            return Err(invalid("channel.drop_prob", "must lie in [0, 1]"));
        }
        if !(self.channel.latency_s >= 0.0 && self.channel.latency_s.is_finite()) {
            return Err(invalid("channel.latency_s", "must be nonnegative"));
        }
        if self.users == 0 {
            return Err(invalid("users", "must be at least 1"));
        }
        Ok(())
    }

    pub fn channel_config(&self) -> ChannelConfig {
        ChannelConfig {
            updates_per_sec: self.updates_per_sec[0],
            float_width: self.channel.float_width_bytes,
            latency: self.channel.latency_s,
            drop_prob: self.channel.drop_prob,
            seed: self.seed,
            users: self.users,
        }
    }

    pub fn to_scenario(&self, name: &str) -> Scenario {
        Scenario {
            name: name.to_string(),
            trajectory: self.trajectory.clone(),
            engines: self.engines.clone(),
            updates_per_sec: self.updates_per_sec.clone(),
            render_rate_hz: self.render_rate_hz,
            channel: self.channel_config(),
        }
    }
}

/// Two-pose LERP-vs-SLERP comparison: one keyframe at each end, rendered
/// at 21 Hz so that 20 frames fall strictly between them.
pub const FIG4_SCENARIO: &str = include_str!("../scenarios/fig4.json");
