//! Reference values computed once at 50 significant digits by an independent
//! implementation (explicit 4x4 boost products, root-finding for the link problem)
//! and frozen here.

use relkin::boost_link::{link_gamma, link_velocity, StateTriple};
use relkin::hyperbolic::hyperbolic_distance;
use relkin::velocity::{einstein_add, max_thomas_angle, thomas_rotation};
use relkin::{StateOfMotion, Velocity3};

fn b1() -> Velocity3 {
    Velocity3::new(0.3, -0.6, 0.2).unwrap()
}

fn b2() -> Velocity3 {
    Velocity3::new(-0.5, 0.1, 0.7).unwrap()
}

fn state(x: f64, y: f64, z: f64) -> StateOfMotion {
    StateOfMotion::from_velocity(&Velocity3::new(x, y, z).unwrap())
}

#[test]
fn frozen_sum() {
    let want = [
        -0.074_540_260_696_422_734_157,
        -0.542_025_455_562_914_208_91,
        0.743_798_540_484_923_732_56,
    ];
    let got = einstein_add(&b1(), &b2()).unwrap().components();
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() < 1e-15, "{g} vs {w}");
    }
}

#[test]
fn frozen_thomas_cosine() {
    let t = thomas_rotation(&b1(), &b2());
    assert!((t.angle.cos() - 0.890_431_205_413_981_002_43).abs() < 1e-14);
}

#[test]
fn frozen_distance() {
    assert!((hyperbolic_distance(&b1(), &b2()) - 1.761_544_105_949_071_561_1).abs() < 1e-14);
}

#[test]
fn frozen_link() {
    let t = StateTriple::new(state(0.1, -0.3, 0.2), state(0.5, 0.2, 0.0), state(-0.4, 0.6, 0.3));
    assert!((link_gamma(&t) - 1.632_544_799_918_630_392_6).abs() < 1e-14);
    let want = [
        -0.172_037_628_976_853_826_88,
        -0.641_251_422_167_566_631_76,
        0.466_432_956_755_667_937_03,
        0.160_087_001_333_016_087,
    ];
    let got = link_velocity(&t).components();
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() < 1e-14, "{g} vs {w}");
    }
}

#[test]
fn frozen_maximal_angle() {
    let m = max_thomas_angle(3.0, 5.0).unwrap();
    assert!((m.phi - 2.186_276_035_465_283_960_3).abs() < 1e-14);
    assert!((m.cos_theta - 1.0 / 3.0).abs() < 1e-15);
}
