use thiserror::Error;

/// Errors raised by the geometric kernel, the codecs and the simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input quaternion is not unit (|q| = {norm})")]
    NonUnitInput { norm: f64 },

    #[error("motor blend collapsed (scalar norm {norm_sq:e}); endpoints are near antipodal")]
    DegenerateBlend { norm_sq: f64 },

    #[error("multivector is not a motor: odd-grade magnitude {odd:e}")]
    NotAMotor { odd: f64 },

    #[error("no keyframes reached the receiver")]
    NoKeyframes,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
