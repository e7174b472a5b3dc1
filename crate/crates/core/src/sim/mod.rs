//! Deterministic sender -> channel -> receiver simulation of a keyframe
//! stream for one rigid object.

pub mod channel;
pub mod matrix;
pub mod packet;
pub mod receiver;
pub mod report;
pub mod trajectory;

pub use channel::{channel_pass, sample_keyframes, Arrival, ChannelConfig};
pub use matrix::{
    bandwidth_reduction, run_matrix, simulate, RatePair, RunResult, Scenario,
    NETWORK_QUALITY_RATES,
};
pub use packet::{decode_stream, encode_stream, FloatWidth, KeyframePacket};
pub use receiver::{reconstruct, Reconstruction, RenderedFrame};
pub use report::{read_trace, rescore_rows, score, trace_rows, write_trace, SimReport, TraceRow};
pub use trajectory::{ControlPose, Trajectory};
