//! Seeded random poses and requests for property suites and benchmarks.

use rand::Rng;

use crate::engines::InterpRequest;
use crate::pose::Pose;
use crate::quat::Quaternion;

/// Uniformly distributed rotation (Shoemake's method).
pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    let (u1, u2, u3): (f64, f64, f64) = (rng.random(), rng.random(), rng.random());
    let tau = std::f64::consts::TAU;
    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
    Quaternion::new(
        a * (tau * u2).sin(),
        a * (tau * u2).cos(),
        b * (tau * u3).sin(),
        b * (tau * u3).cos(),
    )
    .normalize()
}

/// Random pose with `|t| <= max_translation`.
pub fn random_pose<R: Rng + ?Sized>(rng: &mut R, max_translation: f64) -> Pose {
    let k = max_translation / 3f64.sqrt();
    let t = [
        rng.random_range(-1.0..=1.0) * k,
        rng.random_range(-1.0..=1.0) * k,
        rng.random_range(-1.0..=1.0) * k,
    ];
    Pose::normalized(t, random_rotation(rng))
}

pub fn random_request<R: Rng + ?Sized>(rng: &mut R, max_translation: f64) -> InterpRequest {
    InterpRequest {
        from: random_pose(rng, max_translation),
        to: random_pose(rng, max_translation),
        a: rng.random(),
    }
}
