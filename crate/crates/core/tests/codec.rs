mod common;

use common::*;
use posetween::codec::*;
use posetween::ga::pga::motor_normalize;
use posetween::sample::random_pose;
use posetween::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn sample_poses(seed: u64, n: usize) -> Vec<Pose> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_pose(&mut rng, 10.0)).collect()
}

#[test]
fn identity_encodes_to_identity() {
    assert_eq!(pose_to_dq(&Pose::IDENTITY).unwrap(), DualQuaternion::IDENTITY);
    assert_eq!(pose_to_pga_motor(&Pose::IDENTITY).unwrap(), Pga::scalar(1.0));
    assert_eq!(pose_to_cga_motor(&Pose::IDENTITY).unwrap(), Cga::scalar(1.0));
}

#[test]
fn pure_translation_encodings() {
    let p = Pose::from_translation([1.0, 2.0, 3.0]);
    let d = pose_to_dq(&p).unwrap();
    assert_eq!(d.real, Quaternion::IDENTITY);
    assert_eq!(d.dual, Quaternion::new(0.5, 1.0, 1.5, 0.0));

    let m = pose_to_pga_motor(&p).unwrap();
    let mut expect = Pga::scalar(1.0);
    expect.0[Pga::index_of("e01").unwrap()] = -0.5;
    expect.0[Pga::index_of("e02").unwrap()] = -1.0;
    expect.0[Pga::index_of("e03").unwrap()] = -1.5;
    assert_eq!(m, expect);
    assert_vec_close(m.apply_to_point([0.0; 3]), [1.0, 2.0, 3.0], 1e-15);
}

#[test]
fn rotation_about_z_encodings() {
    let p = Pose::from_rotation(axis_angle(Z, 90.0));
    let c = std::f64::consts::FRAC_1_SQRT_2;
    let m = pose_to_pga_motor(&p).unwrap();
    assert!((m[0] - c).abs() < 1e-15);
    assert!((m.get("e12") + c).abs() < 1e-15);
    assert!(m.get("e13").abs() < 1e-15 && m.get("e23").abs() < 1e-15);
    assert_vec_close(m.apply_to_point([1.0, 0.0, 0.0]), [0.0, 1.0, 0.0], 1e-15);

    let cm = pose_to_cga_motor(&p).unwrap();
    assert_vec_close(cm.apply_to_point([1.0, 0.0, 0.0]), [0.0, 1.0, 0.0], 1e-15);
}

#[test]
fn encodings_act_like_the_matrix() {
    for p in sample_poses(21, 1000) {
        let mat = pose_matrix(&p);
        let d = pose_to_dq(&p).unwrap();
        let m = pose_to_pga_motor(&p).unwrap();
        let c = pose_to_cga_motor(&p).unwrap();
        for probe in PROBE_POINTS {
            let want = apply_matrix(&mat, probe);
            assert!(dist(d.transform_point(probe), want) < TOL);
            assert!(dist(m.apply_to_point(probe), want) < TOL);
            assert!(dist(c.apply_to_point(probe), want) < TOL);
        }
    }
}

#[test]
fn round_trips_recover_the_pose() {
    for p in sample_poses(22, 1000) {
        let d = dq_to_pose(&pose_to_dq(&p).unwrap()).unwrap();
        let m = pga_motor_to_pose(&pose_to_pga_motor(&p).unwrap()).unwrap();
        let c = cga_motor_to_pose(&pose_to_cga_motor(&p).unwrap()).unwrap();
        for back in [d, m, c] {
            assert!(back.max_component_diff(&p) < TOL, "{p:?} -> {back:?}");
        }
    }
}

#[test]
fn decoding_ignores_overall_sign() {
    for p in sample_poses(23, 200) {
        let d = pose_to_dq(&p).unwrap();
        let m = pose_to_pga_motor(&p).unwrap();
        let c = pose_to_cga_motor(&p).unwrap();
        assert!(dq_to_pose(&-d).unwrap().max_component_diff(&p) < TOL);
        assert!(pga_motor_to_pose(&-m).unwrap().max_component_diff(&p) < TOL);
        assert!(cga_motor_to_pose(&-c).unwrap().max_component_diff(&p) < TOL);
    }
}

#[test]
fn composition_matches_matrix_product() {
    let poses = sample_poses(24, 1000);
    for w in poses.chunks(2) {
        let (p1, p2) = (w[0], w[1]);
        let oracle = matrix_pose(&(pose_matrix(&p1) * pose_matrix(&p2)));
        assert!(p1.compose(&p2).max_component_diff(&oracle) < TOL);

        let d = pose_to_dq(&p1).unwrap() * pose_to_dq(&p2).unwrap();
        assert!(dq_to_pose(&d).unwrap().max_component_diff(&oracle) < TOL);
        let m = pose_to_pga_motor(&p1).unwrap() * pose_to_pga_motor(&p2).unwrap();
        assert!(pga_motor_to_pose(&m).unwrap().max_component_diff(&oracle) < TOL);
        let c = pose_to_cga_motor(&p1).unwrap() * pose_to_cga_motor(&p2).unwrap();
        assert!(cga_motor_to_pose(&c).unwrap().max_component_diff(&oracle) < TOL);
    }
}

#[test]
fn motor_sandwich_leaves_no_stray_grades() {
    for p in sample_poses(25, 200) {
        let m = pose_to_pga_motor(&p).unwrap();
        let x = Pga::point([0.3, -1.2, 2.0]);
        let image = m.sandwich(&x);
        let non_trivector = image.max_abs_diff(&image.grade(3));
        assert!(non_trivector < TOL);
        let cm = pose_to_cga_motor(&p).unwrap();
        let ci = cm.sandwich(&Cga::point([0.3, -1.2, 2.0]));
        assert!(ci.max_abs_diff(&ci.grade(1)) < TOL);
    }
}

#[test]
fn isomorphism_preserves_products() {
    let poses = sample_poses(26, 400);
    for w in poses.chunks(2) {
        let (d1, d2) = (pose_to_dq(&w[0]).unwrap(), pose_to_dq(&w[1]).unwrap());
        let lhs = dq_to_pga_motor(&(d1 * d2));
        let rhs = dq_to_pga_motor(&d1) * dq_to_pga_motor(&d2);
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        assert!(dq_to_pga_motor(&d1).max_abs_diff(&pose_to_pga_motor(&w[0]).unwrap()) < 1e-12);
        let back = pga_motor_to_dq(&dq_to_pga_motor(&d1));
        assert_eq!(back, d1);
    }
}

#[test]
fn cross_encode_agrees() {
    let r = cross_encode_check(&Pose::normalized([1.0, 2.0, 3.0], axis_angle([0.0, 1.0, 0.0], 45.0))).unwrap();
    assert!(r.max_deviation < TOL, "{r:?}");
    for p in sample_poses(27, 500) {
        assert!(cross_encode_check(&p).unwrap().max_deviation < TOL);
    }
}

#[test]
fn non_motor_input_is_rejected() {
    let mut m = pose_to_pga_motor(&Pose::IDENTITY).unwrap();
    m.0[Pga::index_of("e1").unwrap()] = 0.5;
    assert!(matches!(pga_motor_to_pose(&m), Err(Error::NotAMotor { .. })));
    let mut c = Cga::scalar(1.0);
    c.0[Cga::index_of("e123").unwrap()] = 0.5;
    assert!(matches!(cga_motor_to_pose(&c), Err(Error::NotAMotor { .. })));
    // tiny odd residue is tolerated
    m.0[Pga::index_of("e1").unwrap()] = 1e-8;
    assert!(pga_motor_to_pose(&m).is_ok());
}

#[test]
fn non_unit_quaternion_is_rejected() {
    let bad = Pose { t: [0.0; 3], q: Quaternion::new(0.0, 0.0, 0.0, 1.1) };
    assert!(matches!(pose_to_dq(&bad), Err(Error::NonUnitInput { .. })));
    assert!(matches!(pose_to_pga_motor(&bad), Err(Error::NonUnitInput { .. })));
    assert!(matches!(pose_to_cga_motor(&bad), Err(Error::NonUnitInput { .. })));
    assert!(Pose::new([0.0; 3], bad.q).is_err());
}

/// `2 A B*` gives the negated translation; `2 B A*` is the right reading
/// for `d = (1 + eps t/2) q`.
#[test]
fn translation_uses_dual_times_conjugate_real() {
    for p in sample_poses(28, 100) {
        let d = pose_to_dq(&p).unwrap();
        let wrong = (d.real * d.dual.conjugate()).scale(2.0);
        assert_vec_close(wrong.vector(), [-p.t[0], -p.t[1], -p.t[2]], TOL);
        assert_vec_close(d.translation(), p.t, TOL);
    }
}

#[test]
fn normalized_blends_decode_like_matrix_blend_endpoints() {
    // normalizing a scaled motor leaves the decoded pose unchanged
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for p in sample_poses(29, 200) {
        let k: f64 = rng.random_range(0.1..5.0);
        let m = pose_to_pga_motor(&p).unwrap().scale(k);
        let back = pga_motor_to_pose(&motor_normalize(&m).unwrap()).unwrap();
        assert!(back.max_component_diff(&p) < TOL);
    }
}
