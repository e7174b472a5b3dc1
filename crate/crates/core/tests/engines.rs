mod common;

use common::*;
use posetween::engines::*;
use posetween::sample::{random_pose, random_request, random_rotation};
use posetween::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn req(from: Pose, to: Pose, a: f64) -> InterpRequest {
    InterpRequest::new(from, to, a).unwrap()
}

#[test]
fn baseline_examples() {
    let to = Pose::normalized([2.0, 0.0, 0.0], Quaternion::IDENTITY);
    let p = interp_baseline(&req(Pose::IDENTITY, to, 0.5));
    assert_eq!(p.t, [1.0, 0.0, 0.0]);
    assert_quat_close(&p.q, &Quaternion::IDENTITY, 0.0);

    let to = Pose::from_rotation(axis_angle(Z, 90.0));
    let p = interp_baseline(&req(Pose::IDENTITY, to, 0.5));
    assert_quat_close(&p.q, &axis_angle(Z, 45.0), 1e-15);
}

#[test]
fn dq_examples() {
    let to = Pose::normalized([2.0, 0.0, 0.0], Quaternion::IDENTITY);
    let p = interp_dq(&req(Pose::IDENTITY, to, 0.5));
    assert!(p.max_component_diff(&Pose::from_translation([1.0, 0.0, 0.0])) < 1e-15);

    // screw about z with 2 m advance: half way is 45 deg and 1 m
    let to = Pose::normalized([0.0, 0.0, 2.0], axis_angle(Z, 90.0));
    let p = interp_dq(&req(Pose::IDENTITY, to, 0.5));
    let expect = Pose::normalized([0.0, 0.0, 1.0], axis_angle(Z, 45.0));
    assert!(p.max_component_diff(&expect) < 1e-12);
}

/// Rotation about z by 90 deg around the point (1, 0, 0): the origin
/// travels along a circular arc, which SLERP of the translation cannot do.
#[test]
fn dq_follows_arc_where_baseline_cuts_the_chord() {
    let to = Pose::normalized([1.0, -1.0, 0.0], axis_angle(Z, 90.0));
    let mid_dq = interp_dq(&req(Pose::IDENTITY, to, 0.5));
    let mid_base = interp_baseline(&req(Pose::IDENTITY, to, 0.5));
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let on_arc = [1.0 - s, -s, 0.0];
    assert_vec_close(mid_dq.t, on_arc, 1e-12);
    assert_vec_close(mid_base.t, [0.5, -0.5, 0.0], 1e-15);
    assert!(dist(mid_base.t, on_arc) > 0.2);
}

#[test]
fn motor_lerp_examples() {
    let to = Pose::from_rotation(axis_angle(Z, 90.0));
    for alg in [MotorAlgebra::Pga, MotorAlgebra::Cga] {
        let p = interp_motor_lerp(&req(Pose::IDENTITY, to, 0.5), alg).unwrap();
        assert_quat_close(&p.q, &axis_angle(Z, 45.0), 1e-15);
        assert_vec_close(p.t, [0.0; 3], 1e-15);
    }
    let to = Pose::normalized([2.0, 0.0, 0.0], axis_angle(Z, 90.0));
    let r = req(Pose::IDENTITY, to, 0.5);
    let lerp = interp_motor_lerp(&r, MotorAlgebra::Pga).unwrap();
    let slerp = interp_motor_slerp(&r);
    assert!(lerp.angular_error(&slerp) < 1e-12);
    assert!(lerp.translation_error(&slerp) < 0.1);
}

#[test]
fn engine_parse_and_names() {
    for e in EngineKind::ALL {
        assert_eq!(e.name().parse::<EngineKind>().unwrap(), e);
        assert_eq!(e.name().to_lowercase().parse::<EngineKind>().unwrap(), e);
    }
    assert!("Cubic".parse::<EngineKind>().is_err());
}

#[test]
fn request_validation() {
    let bad = Pose { t: [0.0; 3], q: Quaternion::new(0.0, 0.0, 0.0, 0.5) };
    assert!(matches!(
        InterpRequest::new(bad, Pose::IDENTITY, 0.5),
        Err(Error::NonUnitInput { .. })
    ));
    assert!(InterpRequest::new(Pose::IDENTITY, Pose::IDENTITY, 1.5).is_err());
    assert!(InterpRequest::new(Pose::IDENTITY, Pose::IDENTITY, f64::NAN).is_err());
}

#[test]
fn every_engine_hits_the_endpoints() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..500 {
        let (p1, p2) = (random_pose(&mut rng, 10.0), random_pose(&mut rng, 10.0));
        for e in EngineKind::ALL {
            let a0 = e.interpolate(&req(p1, p2, 0.0)).unwrap();
            let a1 = e.interpolate(&req(p1, p2, 1.0)).unwrap();
            assert!(a0.max_component_diff(&p1) < 1e-9, "{e} at 0");
            assert!(a1.max_component_diff(&p2) < 1e-9, "{e} at 1");
        }
    }
}

#[test]
fn engines_agree_on_pure_rotation_and_pure_translation() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..300 {
        let a: f64 = rng.random();
        let (q1, q2) = (random_rotation(&mut rng), random_rotation(&mut rng));
        let r = req(Pose::from_rotation(q1), Pose::from_rotation(q2), a);
        let base = interp_baseline(&r);
        for e in [EngineKind::DualQuat, EngineKind::MotorSlerp] {
            assert!(e.interpolate(&r).unwrap().max_component_diff(&base) < 1e-9);
        }
        let t1 = random_pose(&mut rng, 5.0).t;
        let t2 = random_pose(&mut rng, 5.0).t;
        let r = req(Pose::from_translation(t1), Pose::from_translation(t2), a);
        let base = interp_baseline(&r);
        for e in EngineKind::ALL {
            assert!(e.interpolate(&r).unwrap().max_component_diff(&base) < 1e-9, "{e}");
        }
    }
}

#[test]
fn dq_and_motor_slerp_coincide() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..200 {
        let r = random_request(&mut rng, 10.0);
        for k in 0..=10 {
            let r = req(r.from, r.to, k as f64 / 10.0);
            assert!(interp_dq(&r).max_component_diff(&interp_motor_slerp(&r)) < 1e-9);
        }
    }
}

#[test]
fn pga_and_cga_lerp_coincide() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..500 {
        let r = random_request(&mut rng, 10.0);
        let p = interp_motor_lerp(&r, MotorAlgebra::Pga).unwrap();
        let c = interp_motor_lerp(&r, MotorAlgebra::Cga).unwrap();
        assert!(p.max_component_diff(&c) < 1e-9);
    }
}

#[test]
fn dq_is_invariant_under_common_frame_change() {
    // interpolating g*p1 -> g*p2 equals g * interp(p1 -> p2)
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..300 {
        let r = random_request(&mut rng, 5.0);
        let g = random_pose(&mut rng, 5.0);
        let moved = req(g.compose(&r.from), g.compose(&r.to), r.a);
        let lhs = interp_dq(&moved);
        let rhs = matrix_pose(&(pose_matrix(&g) * pose_matrix(&interp_dq(&r))));
        assert!(lhs.max_component_diff(&rhs) < 1e-8);
    }
}

#[test]
fn bundled_scenario_deviation_is_small() {
    let from = Pose::IDENTITY;
    let to = Pose::normalized([1.0, 0.0, 0.0], axis_angle(Z, 90.0));
    let worst = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
        .iter()
        .map(|&probe| lerp_slerp_deviation(&from, &to, 20, probe).unwrap().ratio())
        .fold(0.0, f64::max);
    assert!(worst > 0.0 && worst <= 0.02, "{worst}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn lerp_stays_close_to_slerp_at_desk_scale(
        seed in any::<u64>(), deg in 0.0f64..=90.0, tlen in 0.0f64..=1.0
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let axis = random_pose(&mut rng, 1.0).t;
        let dir = random_pose(&mut rng, 1.0).t;
        let from = random_pose(&mut rng, 3.0);
        let n = dist(dir, [0.0; 3]).max(1e-12);
        let delta = Pose::normalized(
            [dir[0] / n * tlen, dir[1] / n * tlen, dir[2] / n * tlen],
            axis_angle(axis, deg),
        );
        let to = from.compose(&delta);
        let probe = {
            let p = random_pose(&mut rng, 1.0).t;
            let n = dist(p, [0.0; 3]).max(1e-12);
            [p[0] / n, p[1] / n, p[2] / n]
        };
        let d = lerp_slerp_deviation(&from, &to, 20, probe).unwrap();
        prop_assert!(d.ratio() <= 0.032, "ratio {}", d.ratio());
    }

    #[test]
    fn rotation_angle_grows_monotonically(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_request(&mut rng, 5.0);
        for e in EngineKind::ALL {
            let mut last = -1.0;
            for k in 0..=20 {
                let p = e.interpolate(&req(r.from, r.to, k as f64 / 20.0)).unwrap();
                let ang = r.from.q.angle_to(&p.q);
                prop_assert!(ang >= last - 1e-9, "{e}: {ang} after {last}");
                last = ang;
            }
        }
    }
}
