//! Rigid pose interpolation for networked keyframe streams.
//!
//! Three interchangeable interpolation engines turn a pair of keyframe
//! poses into in-between frames:
//!
//! * vector LERP plus quaternion SLERP,
//! * dual-quaternion screw interpolation (ScLERP),
//! * normalized linear blending of 3D PGA or 3D CGA motors.
//!
//! [`sim`] drives them from a simulated sender/channel/receiver pipeline
//! and scores the reconstruction against ground truth.

// `!(x >= lim)` is used on purpose so NaN lands in the error branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod codec;
pub mod dual_quat;
pub mod engines;
pub mod error;
pub mod ga;
pub mod pose;
pub mod sample;
pub mod quat;
pub mod scenario;
pub mod selftest;
pub mod sim;
pub mod bench;

pub use dual_quat::DualQuaternion;
pub use engines::{EngineKind, InterpRequest};
pub use error::{Error, Result};
pub use ga::{Cga, Pga};
pub use pose::Pose;
pub use quat::{Quaternion, Vec3};
