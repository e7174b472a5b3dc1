//! Independent 4x4-matrix / nalgebra oracles.

#![allow(dead_code)]

use nalgebra::{Matrix3, Matrix4, Rotation3, UnitQuaternion, Vector3, Vector4};
use posetween::{Pose, Quaternion, Vec3};

pub fn na_quat(q: &Quaternion) -> UnitQuaternion<f64> {
    UnitQuaternion::from_quaternion(nalgebra::Quaternion::new(q.w, q.x, q.y, q.z))
}

pub fn rotation_matrix(q: &Quaternion) -> Matrix3<f64> {
    *na_quat(q).to_rotation_matrix().matrix()
}

/// Homogeneous matrix of "rotate by q, then translate by t".
pub fn pose_matrix(p: &Pose) -> Matrix4<f64> {
    let mut m = Matrix4::identity();
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(&rotation_matrix(&p.q));
    m[(0, 3)] = p.t[0];
    m[(1, 3)] = p.t[1];
    m[(2, 3)] = p.t[2];
    m
}

pub fn matrix_pose(m: &Matrix4<f64>) -> Pose {
    let r = Rotation3::from_matrix_unchecked(m.fixed_view::<3, 3>(0, 0).into_owned());
    let q = UnitQuaternion::from_rotation_matrix(&r);
    Pose::normalized(
        [m[(0, 3)], m[(1, 3)], m[(2, 3)]],
        Quaternion::new(q.i, q.j, q.k, q.w),
    )
}

pub fn apply_matrix(m: &Matrix4<f64>, p: Vec3) -> Vec3 {
    let v = m * Vector4::new(p[0], p[1], p[2], 1.0);
    [v[0], v[1], v[2]]
}

pub fn dist(a: Vec3, b: Vec3) -> f64 {
    (Vector3::from(a) - Vector3::from(b)).norm()
}

pub fn axis_angle(axis: Vec3, deg: f64) -> Quaternion {
    Quaternion::from_axis_angle(axis, deg.to_radians())
}

pub const Z: Vec3 = [0.0, 0.0, 1.0];

pub fn assert_quat_close(a: &Quaternion, b: &Quaternion, tol: f64) {
    let d = a
        .to_array()
        .iter()
        .zip(b.to_array())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    assert!(d <= tol, "{a:?} vs {b:?} (diff {d:e})");
}

pub fn assert_vec_close(a: Vec3, b: Vec3, tol: f64) {
    assert!(dist(a, b) <= tol, "{a:?} vs {b:?}");
}
