//! Seeded conformance suites: encoding round trips, DQ/motor isomorphism
//! and engine endpoint exactness.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::codec::{
    cga_motor_to_pose, cross_encode_check, dq_to_pose, pga_motor_to_pose, pose_to_cga_motor,
    pose_to_dq, pose_to_pga_motor,
};
use crate::engines::{interp_dq, interp_motor_slerp, EngineKind, InterpRequest};
use crate::error::Result;
use crate::ga::{Cga, Pga};
use crate::pose::Pose;
use crate::quat::Quaternion;
use crate::sample::{random_pose, random_request};
use crate::DualQuaternion;

pub const TOLERANCE: f64 = 1e-9;
pub const ROUND_TRIP_CASES: usize = 1000;
pub const ISOMORPHISM_REQUESTS: usize = 200;
pub const PARAMETER_STEPS: usize = 11;
pub const MAX_TRANSLATION: f64 = 10.0;

/// Decoders under test; swapping one out lets a suite be checked against a
/// deliberately broken implementation.
#[derive(Clone, Copy)]
pub struct Decoders {
    pub dq: fn(&DualQuaternion) -> Result<Pose>,
    pub pga: fn(&Pga) -> Result<Pose>,
    pub cga: fn(&Cga) -> Result<Pose>,
}

impl Default for Decoders {
    fn default() -> Self {
        Self {
            dq: dq_to_pose,
            pga: pga_motor_to_pose,
            cga: cga_motor_to_pose,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub seed: u64,
    pub case: usize,
    /// Smallest input found that still fails.
    pub input: String,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub max_error: f64,
    pub failure: Option<Failure>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "PASS {:<26} {:>5} cases  max error {:.3e}",
                self.name, self.cases, self.max_error
            ),
            Some(fail) => write!(
                f,
                "FAIL {:<26} case {} (seed {}): error {:.3e} for {}",
                self.name, fail.case, fail.seed, fail.error, fail.input
            ),
        }
    }
}

pub const SUITES: [&str; 6] = [
    "roundtrip-dq",
    "roundtrip-pga",
    "roundtrip-cga",
    "isomorphism-cross-encode",
    "isomorphism-dq-motor-slerp",
    "endpoints",
];

/// Runs every suite whose name contains `filter` (all when `None`).
pub fn run(seed: u64, filter: Option<&str>, decoders: &Decoders) -> Vec<SuiteOutcome> {
    SUITES
        .iter()
        .filter(|name| filter.is_none_or(|f| name.contains(f)))
        .map(|&name| run_suite(name, seed, decoders))
        .collect()
}

fn run_suite(name: &'static str, seed: u64, dec: &Decoders) -> SuiteOutcome {
    match name {
        "roundtrip-dq" => pose_suite(name, seed, |p| {
            round_trip_error(p, |p| pose_to_dq(p).and_then(|d| (dec.dq)(&d)))
        }),
        "roundtrip-pga" => pose_suite(name, seed, |p| {
            round_trip_error(p, |p| pose_to_pga_motor(p).and_then(|m| (dec.pga)(&m)))
        }),
        "roundtrip-cga" => pose_suite(name, seed, |p| {
            round_trip_error(p, |p| pose_to_cga_motor(p).and_then(|m| (dec.cga)(&m)))
        }),
        "isomorphism-cross-encode" => pose_suite(name, seed, |p| {
            cross_encode_check(p).map_or(f64::INFINITY, |r| r.max_deviation)
        }),
        "isomorphism-dq-motor-slerp" => request_suite(name, seed, |r| {
            interp_dq(r).max_component_diff(&interp_motor_slerp(r))
        }),
        "endpoints" => request_suite(name, seed, endpoint_error),
        _ => unreachable!("unknown suite {name}"),
    }
}

fn round_trip_error(p: &Pose, f: impl Fn(&Pose) -> Result<Pose>) -> f64 {
    f(p).map_or(f64::INFINITY, |back| back.max_component_diff(p))
}

fn endpoint_error(r: &InterpRequest) -> f64 {
    EngineKind::ALL
        .iter()
        .flat_map(|k| {
            [(0.0, r.from), (1.0, r.to)].map(|(a, expect)| {
                k.interpolate(&InterpRequest { a, ..*r })
                    .map_or(f64::INFINITY, |p| p.max_component_diff(&expect))
            })
        })
        .fold(0.0, f64::max)
}

fn pose_suite(name: &'static str, seed: u64, err: impl Fn(&Pose) -> f64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_error: f64 = 0.0;
    for case in 0..ROUND_TRIP_CASES {
        let p = random_pose(&mut rng, MAX_TRANSLATION);
        let e = err(&p);
        if !(e <= TOLERANCE) {
            let (p, e) = minimize_pose(p, e, &err);
            return SuiteOutcome {
                name,
                cases: case + 1,
                max_error: e,
                failure: Some(Failure {
                    seed,
                    case,
                    input: format!("pose t={:?} q={:?}", p.t, p.q.to_array()),
                    error: e,
                }),
            };
        }
        max_error = max_error.max(e);
    }
    SuiteOutcome {
        name,
        cases: ROUND_TRIP_CASES,
        max_error,
        failure: None,
    }
}

fn request_suite(
    name: &'static str,
    seed: u64,
    err: impl Fn(&InterpRequest) -> f64,
) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_error: f64 = 0.0;
    let mut cases = 0;
    for case in 0..ISOMORPHISM_REQUESTS {
        let base = random_request(&mut rng, MAX_TRANSLATION);
        for step in 0..PARAMETER_STEPS {
            let r = InterpRequest {
                a: step as f64 / (PARAMETER_STEPS - 1) as f64,
                ..base
            };
            let e = err(&r);
            cases += 1;
            if !(e <= TOLERANCE) {
                return SuiteOutcome {
                    name,
                    cases,
                    max_error: e,
                    failure: Some(Failure {
                        seed,
                        case,
                        input: format!(
                            "from t={:?} q={:?}, to t={:?} q={:?}, a={}",
                            r.from.t,
                            r.from.q.to_array(),
                            r.to.t,
                            r.to.q.to_array(),
                            r.a
                        ),
                        error: e,
                    }),
                };
            }
            max_error = max_error.max(e);
        }
    }
    SuiteOutcome {
        name,
        cases,
        max_error,
        failure: None,
    }
}

type Shrink = Box<dyn Fn(&Pose) -> Pose>;

/// Greedy shrinking: zero translation components, drop the rotation, then
/// round what is left, keeping each step only while the case still fails.
fn minimize_pose(mut p: Pose, mut e: f64, err: &impl Fn(&Pose) -> f64) -> (Pose, f64) {
    let mut candidates: Vec<Shrink> = Vec::new();
    for i in 0..3 {
        candidates.push(Box::new(move |p: &Pose| {
            let mut t = p.t;
            t[i] = 0.0;
            Pose { t, ..*p }
        }));
    }
    candidates.push(Box::new(|p: &Pose| Pose {
        q: Quaternion::IDENTITY,
        ..*p
    }));
    candidates.push(Box::new(|p: &Pose| Pose {
        t: p.t.map(f64::round),
        ..*p
    }));
    for shrink in &candidates {
        let c = shrink(&p);
        let ce = err(&c);
        if !(ce <= TOLERANCE) {
            p = c;
            e = ce;
        }
    }
    (p, e)
}
