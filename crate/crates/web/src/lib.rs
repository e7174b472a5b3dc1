//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}` so the page never has to catch a JS exception.

use posetween::engines::{
    interp_motor_lerp, interp_motor_slerp, lerp_slerp_deviation, EngineKind, InterpRequest,
    MotorAlgebra,
};
use posetween::sim::{
    channel_pass, reconstruct, sample_keyframes, score, ChannelConfig, FloatWidth, Trajectory,
    NETWORK_QUALITY_RATES,
};
use posetween::{Pose, Quaternion, Vec3};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Body-frame point whose path is drawn next to the object's origin.
pub const PROBE: Vec3 = [1.0, 0.0, 0.0];

#[derive(Debug, Serialize)]
pub struct MotorPaths {
    /// Object origin under LERP / SLERP.
    pub lerp_origin: Vec<Vec3>,
    pub slerp_origin: Vec<Vec3>,
    /// [`PROBE`] under LERP / SLERP.
    pub lerp_probe: Vec<Vec3>,
    pub slerp_probe: Vec<Vec3>,
    pub max_deviation: f64,
    pub deviation_percent: f64,
}

/// Motor LERP and motor SLERP from the identity to the given pose, with
/// `intermediates` frames strictly between the two.
pub fn motor_paths(
    axis: Vec3,
    angle_deg: f64,
    t: Vec3,
    intermediates: usize,
) -> posetween::Result<MotorPaths> {
    let to = Pose::normalized(t, Quaternion::from_axis_angle(axis, angle_deg.to_radians()));
    let steps = intermediates + 1;
    let mut out = MotorPaths {
        lerp_origin: Vec::new(),
        slerp_origin: Vec::new(),
        lerp_probe: Vec::new(),
        slerp_probe: Vec::new(),
        max_deviation: 0.0,
        deviation_percent: 0.0,
    };
    for k in 0..=steps {
        let r = InterpRequest::new(Pose::IDENTITY, to, k as f64 / steps as f64)?;
        let lerp = interp_motor_lerp(&r, MotorAlgebra::Pga)?;
        let slerp = interp_motor_slerp(&r);
        out.lerp_origin.push(lerp.t);
        out.slerp_origin.push(slerp.t);
        out.lerp_probe.push(lerp.transform_point(PROBE));
        out.slerp_probe.push(slerp.transform_point(PROBE));
    }
    let d = lerp_slerp_deviation(&Pose::IDENTITY, &to, intermediates, PROBE)?;
    out.max_deviation = d.max_deviation;
    out.deviation_percent = d.ratio() * 100.0;
    Ok(out)
}

#[derive(Debug, Serialize)]
pub struct StreamRun {
    pub engine: EngineKind,
    pub truth: Vec<Vec3>,
    /// Positions of the keyframes that survived the channel.
    pub keyframes: Vec<Vec3>,
    pub rendered: Vec<Vec3>,
    pub held: Vec<bool>,
    pub pos_rmse: f64,
    pub ang_rmse: f64,
    pub jitter: f64,
    pub bytes_per_sec: f64,
}

/// Streams the bundled bent path through a lossy channel and reconstructs
/// it with one engine.
pub fn stream_run(
    engine: &str,
    updates_per_sec: f64,
    drop_prob: f64,
    seed: u64,
    render_rate_hz: f64,
) -> posetween::Result<StreamRun> {
    let engine: EngineKind = engine.parse()?;
    let traj = Trajectory::bent_path();
    let cfg = ChannelConfig {
        updates_per_sec,
        drop_prob,
        seed,
        ..ChannelConfig::default()
    };
    cfg.validate()?;
    let arrivals = channel_pass(&sample_keyframes(&traj, &cfg), &cfg);
    let rec = reconstruct(&arrivals, engine, render_rate_hz)?;
    let report = score(&rec, &traj, &cfg)?;
    let samples = 200;
    let truth = (0..=samples)
        .map(|i| traj.pose_at(traj.start() + traj.duration() * i as f64 / samples as f64).t)
        .collect();
    Ok(StreamRun {
        engine,
        truth,
        keyframes: arrivals
            .iter()
            .map(|a| [a.packet.payload[0], a.packet.payload[1], a.packet.payload[2]])
            .collect(),
        rendered: rec.frames.iter().map(|f| f.pose.t).collect(),
        held: rec.frames.iter().map(|f| f.held).collect(),
        pos_rmse: report.pos_rmse,
        ang_rmse: report.ang_rmse,
        jitter: report.jitter,
        bytes_per_sec: report.bytes_per_sec,
    })
}

#[derive(Debug, Serialize, PartialEq)]
pub struct BandwidthRow {
    pub quality: &'static str,
    pub baseline_rate: f64,
    pub proposed_rate: f64,
    pub baseline_bytes_per_sec: f64,
    pub proposed_bytes_per_sec: f64,
    pub reduction_percent: i64,
}

pub fn bandwidth_rows(users: u32, float_width_bytes: u8) -> posetween::Result<Vec<BandwidthRow>> {
    let width = FloatWidth::try_from(float_width_bytes)?;
    let bps = |rate| {
        ChannelConfig {
            updates_per_sec: rate,
            float_width: width,
            users,
            ..ChannelConfig::default()
        }
        .bytes_per_sec()
    };
    Ok(NETWORK_QUALITY_RATES
        .iter()
        .map(|p| BandwidthRow {
            quality: p.quality,
            baseline_rate: p.baseline_rate,
            proposed_rate: p.proposed_rate,
            baseline_bytes_per_sec: bps(p.baseline_rate),
            proposed_bytes_per_sec: bps(p.proposed_rate),
            reduction_percent: p.reduction_percent(),
        })
        .collect())
}

fn to_json<T: Serialize>(r: posetween::Result<T>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| error_json(&e.to_string())),
        Err(e) => error_json(&e.to_string()),
    }
}

fn error_json(message: &str) -> String {
    serde_json::json!({ "error": message }).to_string()
}

#[wasm_bindgen(js_name = lerpVsSlerp)]
#[allow(clippy::too_many_arguments)]
pub fn lerp_vs_slerp(
    axis_x: f64,
    axis_y: f64,
    axis_z: f64,
    angle_deg: f64,
    tx: f64,
    ty: f64,
    tz: f64,
    intermediates: usize,
) -> String {
    to_json(motor_paths(
        [axis_x, axis_y, axis_z],
        angle_deg,
        [tx, ty, tz],
        intermediates,
    ))
}

#[wasm_bindgen(js_name = streamPath)]
pub fn stream_path(
    engine: &str,
    updates_per_sec: f64,
    drop_prob: f64,
    seed: u64,
    render_rate_hz: f64,
) -> String {
    to_json(stream_run(engine, updates_per_sec, drop_prob, seed, render_rate_hz))
}

#[wasm_bindgen(js_name = bandwidthTable)]
pub fn bandwidth_table(users: u32, float_width_bytes: u8) -> String {
    to_json(bandwidth_rows(users, float_width_bytes))
}
