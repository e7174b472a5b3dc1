//! Scenario sweeps and the update-rate / bandwidth comparison table.

use super::channel::{channel_pass, sample_keyframes, ChannelConfig};
use super::receiver::{reconstruct, Reconstruction};
use super::report::{score, SimReport};
use super::trajectory::Trajectory;
use crate::engines::EngineKind;
use crate::error::Result;

/// One trajectory run through every listed engine at every listed rate.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub trajectory: Trajectory,
    pub engines: Vec<EngineKind>,
    pub updates_per_sec: Vec<f64>,
    pub render_rate_hz: f64,
    /// Template; `updates_per_sec` is overridden per run.
    pub channel: ChannelConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub scenario: String,
    pub report: SimReport,
    pub reconstruction: Reconstruction,
}

/// Full sender -> channel -> receiver -> score pipeline for one engine and
/// channel setting.
pub fn simulate(
    traj: &Trajectory,
    engine: EngineKind,
    cfg: &ChannelConfig,
    render_rate: f64,
) -> Result<(SimReport, Reconstruction)> {
    cfg.validate()?;
    let packets = sample_keyframes(traj, cfg);
    let arrivals = channel_pass(&packets, cfg);
    let rec = reconstruct(&arrivals, engine, render_rate)?;
    let report = score(&rec, traj, cfg)?;
    Ok((report, rec))
}

/// Runs trajectories x rates x engines, in that nesting order. Every run
/// of a scenario uses the scenario's seed, so all engines at one rate see
/// the same losses.
pub fn run_matrix(scenarios: &[Scenario]) -> Result<Vec<RunResult>> {
    let mut out = Vec::new();
    for sc in scenarios {
        for &rate in &sc.updates_per_sec {
            let cfg = ChannelConfig {
                updates_per_sec: rate,
                ..sc.channel
            };
            for &engine in &sc.engines {
                let (report, reconstruction) =
                    simulate(&sc.trajectory, engine, &cfg, sc.render_rate_hz)?;
                out.push(RunResult {
                    scenario: sc.name.clone(),
                    report,
                    reconstruction,
                });
            }
        }
    }
    Ok(out)
}

/// Fraction of bandwidth saved by sending `ours` instead of `baseline`
/// updates per second.
pub fn bandwidth_reduction(baseline: f64, ours: f64) -> f64 {
    1.0 - ours / baseline
}

/// Network-quality rows: update rates needed for equal perceived quality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePair {
    pub quality: &'static str,
    pub baseline_rate: f64,
    pub proposed_rate: f64,
}

impl RatePair {
    pub fn reduction(&self) -> f64 {
        bandwidth_reduction(self.baseline_rate, self.proposed_rate)
    }

    /// Reduction rounded to the nearest integer percent.
    pub fn reduction_percent(&self) -> i64 {
        (self.reduction() * 100.0).round() as i64
    }
}

pub const NETWORK_QUALITY_RATES: [RatePair; 4] = [
    RatePair {
        quality: "Excellent",
        baseline_rate: 30.0,
        proposed_rate: 20.0,
    },
    RatePair {
        quality: "Good",
        baseline_rate: 20.0,
        proposed_rate: 10.0,
    },
    RatePair {
        quality: "Mediocre",
        baseline_rate: 15.0,
        proposed_rate: 7.0,
    },
    RatePair {
        quality: "Poor",
        baseline_rate: 12.0,
        proposed_rate: 5.0,
    },
];
