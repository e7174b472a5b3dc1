use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::channel::ChannelConfig;
use super::receiver::Reconstruction;
use super::trajectory::Trajectory;
use crate::engines::EngineKind;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub engine: EngineKind,
    pub updates_per_sec: f64,
    pub bytes_per_sec: f64,
    /// Meters.
    pub pos_rmse: f64,
    /// Degrees.
    pub ang_rmse: f64,
    /// Max norm of the second difference of rendered positions, meters.
    pub jitter: f64,
    pub frames_rendered: usize,
    pub held_frames: usize,
    pub render_delay_s: f64,
    pub per_frame_cost_ns: f64,
}

impl SimReport {
    /// Copy with the timing field zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        Self {
            per_frame_cost_ns: 0.0,
            ..self.clone()
        }
    }
}

/// One rendered frame as exported for plotting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub frame_index: usize,
    pub time_s: f64,
    pub engine: EngineKind,
    pub px: f64,
    pub py: f64,
    pub pz: f64,
    pub qx: f64,
    pub qy: f64,
    pub qz: f64,
    pub qw: f64,
    pub err_pos_m: f64,
    pub err_ang_deg: f64,
}

pub fn trace_rows(rec: &Reconstruction, traj: &Trajectory) -> Vec<TraceRow> {
    rec.frames
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let truth = traj.pose_at(f.time);
            TraceRow {
                frame_index: i,
                time_s: f.time,
                engine: rec.engine,
                px: f.pose.t[0],
                py: f.pose.t[1],
                pz: f.pose.t[2],
                qx: f.pose.q.x,
                qy: f.pose.q.y,
                qz: f.pose.q.z,
                qw: f.pose.q.w,
                err_pos_m: f.pose.translation_error(&truth),
                err_ang_deg: f.pose.angular_error(&truth).to_degrees(),
            }
        })
        .collect()
}

fn rms(values: impl Iterator<Item = f64>) -> f64 {
    let (sum, n) = values.fold((0.0, 0usize), |(s, n), v| (s + v * v, n + 1));
    if n == 0 { 0.0 } else { (sum / n as f64).sqrt() }
}

/// `(pos_rmse, ang_rmse)` from exported rows.
pub fn rescore_rows(rows: &[TraceRow]) -> (f64, f64) {
    (
        rms(rows.iter().map(|r| r.err_pos_m)),
        rms(rows.iter().map(|r| r.err_ang_deg)),
    )
}

pub fn jitter(positions: &[[f64; 3]]) -> f64 {
    positions
        .windows(3)
        .map(|w| {
            let d = [
                w[2][0] - 2.0 * w[1][0] + w[0][0],
                w[2][1] - 2.0 * w[1][1] + w[0][1],
                w[2][2] - 2.0 * w[1][2] + w[0][2],
            ];
            (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
        })
        .fold(0.0, f64::max)
}

/// Scores rendered frames against the ground truth at each frame's stream
/// time.
pub fn score(rec: &Reconstruction, traj: &Trajectory, cfg: &ChannelConfig) -> Result<SimReport> {
    if rec.frames.is_empty() {
        return Err(Error::NoKeyframes);
    }
    let rows = trace_rows(rec, traj);
    let (pos_rmse, ang_rmse) = rescore_rows(&rows);
    let positions: Vec<_> = rec.frames.iter().map(|f| f.pose.t).collect();
    Ok(SimReport {
        engine: rec.engine,
        updates_per_sec: cfg.updates_per_sec,
        bytes_per_sec: cfg.bytes_per_sec(),
        pos_rmse,
        ang_rmse,
        jitter: jitter(&positions),
        frames_rendered: rec.frames.len(),
        held_frames: rec.frames.iter().filter(|f| f.held).count(),
        render_delay_s: rec.render_delay,
        per_frame_cost_ns: rec.per_frame_cost_ns,
    })
}

pub fn write_trace<W: Write>(out: W, rows: &[TraceRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(io_err)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

pub fn read_trace<R: Read>(input: R) -> Result<Vec<TraceRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(io_err))
        .collect()
}

fn io_err(e: csv::Error) -> Error {
    Error::Io(format!("trace: {e}"))
}
