//! Keyframe packets and their little-endian wire image:
//! `u32 seq | f64 t_send | 7 x (f64 | f32) payload`, no padding.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pose::Pose;

/// Reals per displacement payload: translation (3) + quaternion (4).
pub const PAYLOAD_VALUES: usize = 7;

const HEADER_BYTES: usize = 4 + 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum FloatWidth {
    F32,
    #[default]
    F64,
}

impl FloatWidth {
    pub fn bytes(self) -> usize {
        match self {
            FloatWidth::F32 => 4,
            FloatWidth::F64 => 8,
        }
    }

    /// Rounds `v` to what survives the wire.
    pub fn quantize(self, v: f64) -> f64 {
        match self {
            FloatWidth::F32 => f64::from(v as f32),
            FloatWidth::F64 => v,
        }
    }
}

impl TryFrom<u8> for FloatWidth {
    type Error = Error;

    fn try_from(b: u8) -> Result<Self> {
        match b {
            4 => Ok(FloatWidth::F32),
            8 => Ok(FloatWidth::F64),
            _ => Err(Error::InvalidConfig(format!(
                "float_width_bytes must be 4 or 8, got {b}"
            ))),
        }
    }
}

impl From<FloatWidth> for u8 {
    fn from(w: FloatWidth) -> u8 {
        w.bytes() as u8
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyframePacket {
    pub seq: u32,
    pub t_send: f64,
    /// `(t1, t2, t3, qx, qy, qz, qw)`.
    pub payload: [f64; PAYLOAD_VALUES],
}

impl KeyframePacket {
    pub fn new(seq: u32, t_send: f64, pose: &Pose) -> Self {
        Self {
            seq,
            t_send,
            payload: pose.to_payload(),
        }
    }

    pub fn pose(&self) -> Result<Pose> {
        Pose::from_payload(self.payload)
    }

    /// Size of one encoded packet, header included.
    pub fn wire_len(width: FloatWidth) -> usize {
        HEADER_BYTES + PAYLOAD_VALUES * width.bytes()
    }

    pub fn encode_into(&self, width: FloatWidth, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.seq.to_le_bytes());
        out.extend_from_slice(&self.t_send.to_le_bytes());
        for v in self.payload {
            match width {
                FloatWidth::F32 => out.extend_from_slice(&(v as f32).to_le_bytes()),
                FloatWidth::F64 => out.extend_from_slice(&v.to_le_bytes()),
            }
        }
    }

    pub fn encode(&self, width: FloatWidth) -> Vec<u8> {
        let mut out = Vec::with_capacity(Self::wire_len(width));
        self.encode_into(width, &mut out);
        out
    }

    pub fn decode(bytes: &[u8], width: FloatWidth) -> Result<Self> {
        if bytes.len() != Self::wire_len(width) {
            return Err(Error::InvalidConfig(format!(
                "packet is {} bytes, expected {}",
                bytes.len(),
                Self::wire_len(width)
            )));
        }
        let seq = u32::from_le_bytes(bytes[0..4].try_into().unwrap());
        let t_send = f64::from_le_bytes(bytes[4..12].try_into().unwrap());
        let w = width.bytes();
        let mut payload = [0.0; PAYLOAD_VALUES];
        for (i, chunk) in bytes[HEADER_BYTES..].chunks_exact(w).enumerate() {
            payload[i] = match width {
                FloatWidth::F32 => f64::from(f32::from_le_bytes(chunk.try_into().unwrap())),
                FloatWidth::F64 => f64::from_le_bytes(chunk.try_into().unwrap()),
            };
        }
        Ok(Self {
            seq,
            t_send,
            payload,
        })
    }
}

/// Concatenated wire images, as written by the packet dump.
pub fn encode_stream(packets: &[KeyframePacket], width: FloatWidth) -> Vec<u8> {
    let mut out = Vec::with_capacity(packets.len() * KeyframePacket::wire_len(width));
    for p in packets {
        p.encode_into(width, &mut out);
    }
    out
}

pub fn decode_stream(bytes: &[u8], width: FloatWidth) -> Result<Vec<KeyframePacket>> {
    let n = KeyframePacket::wire_len(width);
    if !bytes.len().is_multiple_of(n) {
        return Err(Error::InvalidConfig(format!(
            "dump length {} is not a multiple of {n}",
            bytes.len()
        )));
    }
    bytes
        .chunks_exact(n)
        .map(|c| KeyframePacket::decode(c, width))
        .collect()
}
