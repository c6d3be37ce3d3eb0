mod common;

use common::*;
use nalgebra::Vector4;
use proptest::prelude::*;
use relkin::linalg::{max_abs, Mat4};
use relkin::minkowski::{
    generator, lie_bracket, outer, projectors, relative_velocity, wedge, wedge_bracket,
};
use relkin::{FourVector, StateOfMotion};

fn four() -> impl Strategy<Value = FourVector> {
    prop::array::uniform4(-3.0..3.0f64).prop_map(|c| FourVector::new(c[0], c[1], c[2], c[3]))
}

fn state_strategy(log_max: f64) -> impl Strategy<Value = StateOfMotion> {
    (prop::array::uniform3(-1.0..1.0f64), 0.0..log_max).prop_map(|(d, lg)| state_from(d, lg))
}

proptest! {
    #[test]
    fn outer_acts_through_the_metric(u in four(), v in four(), w in four()) {
        let got = outer(&u, &v) * w.vec();
        let want = u.vec() * mdot(v.vec(), w.vec());
        prop_assert!((got - want).amax() < 1e-12);
    }

    #[test]
    fn wedge_is_antisymmetric(u in four(), v in four()) {
        prop_assert!(max_abs(&(wedge(&u, &v) + wedge(&v, &u))) == 0.0);
    }

    #[test]
    fn bracket_closed_form_matches_commutator(v in four(), w in four(), vp in four(), wp in four()) {
        let closed = wedge_bracket(&v, &w, &vp, &wp);
        let direct = lie_bracket(&wedge(&v, &w), &wedge(&vp, &wp));
        prop_assert!(max_abs(&(closed - direct)) < 1e-11);
    }

    #[test]
    fn wedge_generates_lorentz_algebra(u in four(), v in four()) {
        // η A is antisymmetric exactly when A is in the Lorentz algebra.
        let eta = Mat4::from_diagonal(&Vector4::new(-1.0, 1.0, 1.0, 1.0));
        let a = eta * wedge(&u, &v);
        prop_assert!(max_abs(&(a + a.transpose())) < 1e-12);
    }

    #[test]
    fn projectors_split_identity(s in state_strategy(4.0)) {
        let (par, perp) = projectors(&s);
        let scale = s.vector().max_abs().powi(2);
        prop_assert!(max_abs(&(par + perp - Mat4::identity())) < 1e-14 * scale);
        prop_assert!(max_abs(&(par * par - par)) < 1e-12 * scale * scale);
        prop_assert!((perp * s.vector().vec()).amax() < 1e-12 * scale);
        prop_assert!((par * s.vector().vec() - s.vector().vec()).amax() < 1e-12 * scale);
    }

    #[test]
    fn states_are_normalised(raw in prop::array::uniform3(-2.0..2.0f64), t in 0.1..5.0f64) {
        let space = nalgebra::Vector3::from(raw);
        prop_assume!(space.norm() < 0.99 * t);
        let s = StateOfMotion::new(FourVector::from_parts(t, &space)).unwrap();
        prop_assert!((s.vector().norm_sq() + 1.0).abs() < 1e-12);
        prop_assert!(s.vector().time() > 0.0);
    }

    #[test]
    fn relative_velocity_is_tangent_with_matching_gamma(s in state_strategy(3.0), s1 in state_strategy(3.0)) {
        let b = relative_velocity(&s, &s1);
        let g = s.gamma_against(&s1);
        let scale = s.vector().max_abs() * s1.vector().max_abs();
        prop_assert!(b.dot(&s.vector()).abs() < 1e-12 * scale);
        let speed_sq = b.norm_sq();
        prop_assert!(speed_sq < 1.0);
        prop_assert!((1.0 / (1.0 - speed_sq).sqrt() - g).abs() < 1e-8 * g * g);
        let rebuilt = (s.vector() + b) * g;
        prop_assert!((rebuilt - s1.vector()).max_abs() < 1e-10 * scale);
    }
}

#[test]
fn generators_obey_signed_brackets() {
    let e = |i| FourVector::basis(i);
    // Two spatial rotations close on the third; a boost and a rotation give a boost.
    assert!(max_abs(&(lie_bracket(&generator(1, 2), &generator(2, 3)) - generator(1, 3))) < 1e-15);
    assert!(max_abs(&(lie_bracket(&generator(0, 1), &generator(1, 2)) - generator(0, 2))) < 1e-15);
    assert!(max_abs(&(wedge_bracket(&e(0), &e(1), &e(1), &e(2)) - generator(0, 2))) < 1e-15);
}
