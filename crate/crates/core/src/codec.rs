//! Conversions between [`Pose`] and the three rigid-transform encodings.
//!
//! All encodings compose as "translate after rotate":
//! `d = (1 + eps t/2) q` for dual quaternions and `M = T R` for motors.
//!
//! Rotor <-> quaternion map (shared by PGA and CGA):
//! `R = a + b e12 + c e13 + d e23  <->  q = a - d i + c j - b k`.

use crate::dual_quat::DualQuaternion;
use crate::error::{Error, Result};
use crate::ga::cga::{self, Cga};
use crate::ga::pga::{self, Pga};
use crate::pose::Pose;
use crate::quat::{Quaternion, Vec3};

/// Odd-grade content above this means the input is not a motor.
pub const MOTOR_ODD_TOLERANCE: f64 = 1e-6;

pub fn pose_to_dq(p: &Pose) -> Result<DualQuaternion> {
    p.q.ensure_unit()?;
    let dual = Quaternion::pure(p.t) * p.q;
    Ok(DualQuaternion::new(p.q, dual.scale(0.5)))
}

/// Rotation from `A`, translation `t = 2 B A*`.
pub fn dq_to_pose(d: &DualQuaternion) -> Result<Pose> {
    d.real.ensure_unit()?;
    Ok(Pose::normalized(d.translation(), d.real))
}

fn rotor_coefficients(q: &Quaternion) -> [f64; 4] {
    // [a, b, c, d] with q = a - d i + c j - b k
    [q.w, -q.z, q.y, -q.x]
}

fn quat_from_rotor(a: f64, b: f64, c: f64, d: f64) -> Quaternion {
    Quaternion::new(-d, c, -b, a)
}

pub fn pga_rotor(q: &Quaternion) -> Pga {
    let [a, b, c, d] = rotor_coefficients(q);
    let mut m = Pga::scalar(a);
    m.0[pga::E12] = b;
    m.0[pga::E13] = c;
    m.0[pga::E23] = d;
    m
}

/// `T = 1 - 0.5 e0 (t1 e1 + t2 e2 + t3 e3)`.
pub fn pga_translator(t: Vec3) -> Pga {
    let mut v = Pga::ZERO;
    v.0[2..5].copy_from_slice(&t);
    Pga::scalar(1.0) - (Pga::blade("e0") * v).scale(0.5)
}

pub fn pose_to_pga_motor(p: &Pose) -> Result<Pga> {
    p.q.ensure_unit()?;
    Ok(pga_translator(p.t) * pga_rotor(&p.q))
}

fn ensure_motor(odd: f64) -> Result<()> {
    if odd > MOTOR_ODD_TOLERANCE {
        Err(Error::NotAMotor { odd })
    } else {
        Ok(())
    }
}

/// Reads the rotation off `e0 M = e0 R` and the translation off
/// `T = M R^-1 = 1 + x e01 + y e02 + z e03` as `(-2x, -2y, -2z)`.
pub fn pga_motor_to_pose(m: &Pga) -> Result<Pose> {
    ensure_motor(m.odd_magnitude())?;
    let e0m = Pga::blade("e0") * *m;
    let (a, b, c, d) = (
        e0m[pga::E0],
        e0m[pga::E012],
        e0m[pga::E013],
        e0m[pga::E023],
    );
    let norm_sq = a * a + b * b + c * c + d * d;
    if !(norm_sq >= pga::DEGENERATE_NORM_SQ) {
        return Err(Error::DegenerateBlend { norm_sq });
    }
    let mut r_inv = Pga::scalar(a);
    r_inv.0[pga::E12] = -b;
    r_inv.0[pga::E13] = -c;
    r_inv.0[pga::E23] = -d;
    let t = *m * r_inv.scale(1.0 / norm_sq);
    let (x, y, z) = (t[pga::E01], t[pga::E02], t[pga::E03]);
    Ok(Pose::normalized(
        [-2.0 * x, -2.0 * y, -2.0 * z],
        quat_from_rotor(a, b, c, d),
    ))
}

pub fn cga_rotor(q: &Quaternion) -> Cga {
    let [a, b, c, d] = rotor_coefficients(q);
    let mut m = Cga::scalar(a);
    m.0[cga::E12] = b;
    m.0[cga::E13] = c;
    m.0[cga::E23] = d;
    m
}

/// `T = 1 - 0.5 (t1 e1 + t2 e2 + t3 e3)(e4 + e5)`.
pub fn cga_translator(t: Vec3) -> Cga {
    let v = Cga::vector([t[0], t[1], t[2], 0.0, 0.0]);
    Cga::scalar(1.0) - (v * Cga::infinity()).scale(0.5)
}

pub fn pose_to_cga_motor(p: &Pose) -> Result<Cga> {
    p.q.ensure_unit()?;
    Ok(cga_translator(p.t) * cga_rotor(&p.q))
}

/// Splits off the rotor part `{1, e12, e13, e23}`, forms `T = M R^-1`,
/// normalizes it and contracts with `e5 - e4` to read the translation.
pub fn cga_motor_to_pose(m: &Cga) -> Result<Pose> {
    ensure_motor(m.odd_magnitude())?;
    let (a, b, c, d) = (m[0], m[cga::E12], m[cga::E13], m[cga::E23]);
    let norm_sq = a * a + b * b + c * c + d * d;
    if !(norm_sq >= pga::DEGENERATE_NORM_SQ) {
        return Err(Error::DegenerateBlend { norm_sq });
    }
    let mut r_inv = Cga::scalar(a);
    r_inv.0[cga::E12] = -b;
    r_inv.0[cga::E13] = -c;
    r_inv.0[cga::E23] = -d;
    let tr = *m * r_inv.scale(1.0 / norm_sq);
    let tr = tr.scale(1.0 / tr.scalar_part());
    let probe = Cga::blade("e5") - Cga::blade("e4");
    let t = cga::cga_inner(&tr, &probe);
    Ok(Pose::normalized(
        [t[cga::E1], t[cga::E2], t[cga::E3]],
        quat_from_rotor(a, b, c, d),
    ))
}

/// Algebra isomorphism from dual quaternions to even PGA:
/// `A + eps B -> rho(A) - e0123 rho(B)`, with `rho` the rotor map.
pub fn dq_to_pga_motor(d: &DualQuaternion) -> Pga {
    let mut m = pga_rotor(&d.real);
    let b = d.dual;
    m.0[pga::E01] = -b.x;
    m.0[pga::E02] = -b.y;
    m.0[pga::E03] = -b.z;
    m.0[pga::E0123] = -b.w;
    m
}

/// Inverse of [`dq_to_pga_motor`] on the even subalgebra.
pub fn pga_motor_to_dq(m: &Pga) -> DualQuaternion {
    let real = quat_from_rotor(m[0], m[pga::E12], m[pga::E13], m[pga::E23]);
    let dual = Quaternion::new(-m[pga::E01], -m[pga::E02], -m[pga::E03], -m[pga::E0123]);
    DualQuaternion::new(real, dual)
}

/// Probe points used by [`cross_encode_check`].
pub const PROBE_POINTS: [Vec3; 6] = [
    [0.0, 0.0, 0.0],
    [1.0, 0.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, 0.0, 1.0],
    [1.0, 1.0, 1.0],
    [-2.0, 0.5, 3.0],
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossEncodeReport {
    /// Largest distance between any two encodings' images of a probe point.
    pub max_deviation: f64,
    pub dq_deviation: f64,
    pub pga_deviation: f64,
    pub cga_deviation: f64,
}

/// Applies the pose directly and through its DQ, PGA and CGA encodings to
/// [`PROBE_POINTS`] and reports how far the images disagree.
pub fn cross_encode_check(p: &Pose) -> Result<CrossEncodeReport> {
    let dq = pose_to_dq(p)?;
    let pm = pose_to_pga_motor(p)?;
    let cm = pose_to_cga_motor(p)?;

    let mut report = CrossEncodeReport {
        max_deviation: 0.0,
        dq_deviation: 0.0,
        pga_deviation: 0.0,
        cga_deviation: 0.0,
    };
    for probe in PROBE_POINTS {
        let images = [
            p.transform_point(probe),
            dq.transform_point(probe),
            pm.apply_to_point(probe),
            cm.apply_to_point(probe),
        ];
        let dist = |i: usize, j: usize| crate::quat::norm3(crate::quat::sub3(images[i], images[j]));
        report.dq_deviation = report.dq_deviation.max(dist(0, 1));
        report.pga_deviation = report.pga_deviation.max(dist(0, 2));
        report.cga_deviation = report.cga_deviation.max(dist(0, 3));
        for i in 0..4 {
            for j in i + 1..4 {
                report.max_deviation = report.max_deviation.max(dist(i, j));
            }
        }
    }
    Ok(report)
}
