use std::time::Instant;

use super::channel::Arrival;
use crate::engines::{EngineKind, InterpRequest};
use crate::error::{Error, Result};
use crate::pose::Pose;

/// Slack for comparing timestamps built from different integer grids.
const TIME_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderedFrame {
    /// Stream time the frame depicts (sender clock).
    pub time: f64,
    pub pose: Pose,
    /// True when no straddling keyframe pair was available and the
    /// previous frame was repeated.
    pub held: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub engine: EngineKind,
    pub frames: Vec<RenderedFrame>,
    /// Receiver-side playback delay: measured latency plus one keyframe
    /// interval.
    pub render_delay: f64,
    /// Wall-clock nanoseconds per rendered frame; not deterministic.
    pub per_frame_cost_ns: f64,
}

/// Renders frames at `render_rate` Hz from the arrived keyframes.
///
/// Playback runs one keyframe interval behind the newest data (plus the
/// one-way latency observed on the first packet), so each tick finds the
/// received keyframes straddling its stream time and interpolates between
/// them. If the later keyframe of the pair has not arrived (it was
/// dropped), the last rendered pose is held. There is no extrapolation.
pub fn reconstruct(
    arrivals: &[Arrival],
    engine: EngineKind,
    render_rate: f64,
) -> Result<Reconstruction> {
    if !(render_rate > 0.0 && render_rate.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "render rate must be positive, got {render_rate}"
        )));
    }
    let (first, last) = match (arrivals.first(), arrivals.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::NoKeyframes),
    };
    let keyframes: Vec<(f64, f64, Pose)> = arrivals
        .iter()
        .map(|a| Ok((a.packet.t_send, a.t_arrive, a.packet.pose()?)))
        .collect::<Result<_>>()?;

    let interval = match arrivals {
        [a, b, ..] => {
            (b.packet.t_send - a.packet.t_send) / f64::from(b.packet.seq - a.packet.seq)
        }
        _ => 0.0,
    };
    let latency = first.t_arrive - first.packet.t_send;
    let delay = latency + interval;
    let t0 = first.packet.t_send;
    let t_end = last.packet.t_send;

    let started = Instant::now();
    let mut frames: Vec<RenderedFrame> = Vec::new();
    // keyframes[..received] have arrived by the current tick
    let mut received = 0;
    let mut k = 0u64;
    loop {
        let time = t0 + k as f64 / render_rate;
        if time > t_end + TIME_EPS {
            break;
        }
        let wall = time + delay;
        while received < keyframes.len() && keyframes[received].1 <= wall + TIME_EPS {
            received += 1;
        }
        let buffered = &keyframes[..received];
        // first buffered keyframe at or after `time`
        let hi = buffered.partition_point(|kf| kf.0 < time - TIME_EPS);
        let frame = if hi < buffered.len() && (buffered[hi].0 - time).abs() <= TIME_EPS {
            Some(buffered[hi].2)
        } else if hi > 0 && hi < buffered.len() {
            let (lo, hi) = (&buffered[hi - 1], &buffered[hi]);
            let a = ((time - lo.0) / (hi.0 - lo.0)).clamp(0.0, 1.0);
            Some(engine.interpolate(&InterpRequest {
                from: lo.2,
                to: hi.2,
                a,
            })?)
        } else {
            None
        };
        frames.push(match (frame, frames.last()) {
            (Some(pose), _) => RenderedFrame {
                time,
                pose,
                held: false,
            },
            (None, Some(prev)) => RenderedFrame {
                time,
                pose: prev.pose,
                held: true,
            },
            // the first tick always sits on the first keyframe
            (None, None) => RenderedFrame {
                time,
                pose: keyframes[0].2,
                held: true,
            },
        });
        k += 1;
    }
    let elapsed = started.elapsed().as_nanos() as f64;

    Ok(Reconstruction {
        engine,
        per_frame_cost_ns: elapsed / frames.len() as f64,
        frames,
        render_delay: delay,
    })
}
