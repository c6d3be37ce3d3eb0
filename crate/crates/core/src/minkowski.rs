//! Minkowski space `R^{1,3}` with the metric `diag(-1, 1, 1, 1)`.
//!
//! Tensor products follow `(u ⊗ v) w = η(v, w) u`, so the matrix of `u ⊗ v`
//! is `u (η v)^T`. Matrices act on column vectors.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::{eta, Mat4, Vec3, Vec4};
use crate::lorentz::{LorentzMatrix, Velocity3};
use crate::tolerance::{NORM_TOL, SAME_STATE_TOL};

/// A four-vector with finite components `(c0, c1, c2, c3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector(Vec4);

impl FourVector {
    /// Build from components.
    ///
    /// # Panics
    /// If a component is not finite. Use [`FourVector::try_new`] for fallible input.
    pub fn new(c0: f64, c1: f64, c2: f64, c3: f64) -> Self {
        Self::try_new(c0, c1, c2, c3).expect("four-vector components must be finite")
    }

    pub fn try_new(c0: f64, c1: f64, c2: f64, c3: f64) -> Result<Self> {
        Self::try_from_vec(Vec4::new(c0, c1, c2, c3))
    }

    pub fn try_from_vec(v: Vec4) -> Result<Self> {
        if v.iter().all(|x| x.is_finite()) {
            Ok(Self(v))
        } else {
            Err(Error::NonFinite("four-vector"))
        }
    }

    pub fn zero() -> Self {
        Self(Vec4::zeros())
    }

    /// The basis vector `e_i`.
    pub fn basis(i: usize) -> Self {
        let mut v = Vec4::zeros();
        v[i] = 1.0;
        Self(v)
    }

    pub fn from_parts(time: f64, space: &Vec3) -> Self {
        Self(Vec4::new(time, space.x, space.y, space.z))
    }

    pub fn vec(&self) -> &Vec4 {
        &self.0
    }

    pub fn components(&self) -> [f64; 4] {
        [self.0[0], self.0[1], self.0[2], self.0[3]]
    }

    pub fn time(&self) -> f64 {
        self.0[0]
    }

    pub fn space(&self) -> Vec3 {
        Vec3::new(self.0[1], self.0[2], self.0[3])
    }

    pub fn dot(&self, other: &Self) -> f64 {
        minkowski_dot(self, other)
    }

    /// `η(v, v)`.
    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.0.amax()
    }

    pub fn transformed(&self, m: &Mat4) -> Self {
        Self(m * self.0)
    }
}

impl Add for FourVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for FourVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Neg for FourVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl Mul<f64> for FourVector {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self(self.0 * rhs)
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, rhs: FourVector) -> FourVector {
        FourVector(rhs.0 * self)
    }
}

/// `-u0 v0 + u1 v1 + u2 v2 + u3 v3`.
pub fn minkowski_dot(u: &FourVector, v: &FourVector) -> f64 {
    -u.0[0] * v.0[0] + u.0[1] * v.0[1] + u.0[2] * v.0[2] + u.0[3] * v.0[3]
}

/// A future-pointing unit timelike vector: `η(s, s) = -1`, `s0 > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateOfMotion(FourVector);

impl StateOfMotion {
    /// Normalise a future-pointing timelike vector.
    pub fn new(v: FourVector) -> Result<Self> {
        let n = v.norm_sq();
        let scale = v.vec().norm_squared();
        if !(n < -NORM_TOL * scale) || v.time() <= 0.0 {
            return Err(Error::NotFutureTimelike {
                norm_sq: n,
                time: v.time(),
            });
        }
        Ok(Self(v * (1.0 / (-n).sqrt())))
    }

    /// The state `e0` of the observer at rest.
    pub fn rest() -> Self {
        Self(FourVector::basis(0))
    }

    /// `γ (1, β)`.
    pub fn from_velocity(beta: &Velocity3) -> Self {
        let g = beta.gamma();
        Self(FourVector::from_parts(g, &(beta.vec() * g)))
    }

    pub fn vector(&self) -> FourVector {
        self.0
    }

    /// Velocity of this state as seen from `e0`.
    pub fn velocity(&self) -> Result<Velocity3> {
        Velocity3::from_vec(self.0.space() / self.0.time())
    }

    /// `-η(s, s1)`, the relative Lorentz factor. Never below 1.
    pub fn gamma_against(&self, other: &StateOfMotion) -> f64 {
        (-self.0.dot(&other.0)).max(1.0)
    }

    /// Image under a Lorentz matrix, renormalised.
    pub fn transformed(&self, l: &LorentzMatrix) -> Self {
        let v = self.0.transformed(l.matrix());
        Self(v * (1.0 / (-v.norm_sq()).sqrt()))
    }
}

/// Matrix of `u ⊗ v`, acting as `w ↦ η(v, w) u`.
pub fn outer(u: &FourVector, v: &FourVector) -> Mat4 {
    u.vec() * (eta() * v.vec()).transpose()
}

/// `u ∧ v = u ⊗ v - v ⊗ u`.
pub fn wedge(u: &FourVector, v: &FourVector) -> Mat4 {
    outer(u, v) - outer(v, u)
}

/// Commutator `[a, b] = ab - ba`.
pub fn lie_bracket(a: &Mat4, b: &Mat4) -> Mat4 {
    a * b - b * a
}

/// Closed form of `[v ∧ w, v' ∧ w']`.
pub fn wedge_bracket(v: &FourVector, w: &FourVector, vp: &FourVector, wp: &FourVector) -> Mat4 {
    wedge(w, vp) * v.dot(wp) + wedge(v, wp) * w.dot(vp)
        - wedge(w, wp) * v.dot(vp)
        - wedge(v, vp) * w.dot(wp)
}

/// Generator `M_ab = e_a ∧ e_b`.
pub fn generator(a: usize, b: usize) -> Mat4 {
    wedge(&FourVector::basis(a), &FourVector::basis(b))
}

/// Projectors `(P∥, P⊥)` onto the time axis of `s` and onto its orthogonal complement.
pub fn projectors(s: &StateOfMotion) -> (Mat4, Mat4) {
    let par = -outer(&s.0, &s.0);
    let perp = Mat4::identity() - par;
    (par, perp)
}

/// Velocity of `s1` relative to `s`, a vector in the tangent space at `s`.
///
/// Exactly zero when the states coincide to within the same-state tolerance.
pub fn relative_velocity(s: &StateOfMotion, s1: &StateOfMotion) -> FourVector {
    let g = s.gamma_against(s1);
    if g - 1.0 < SAME_STATE_TOL {
        return FourVector::zero();
    }
    s1.0 * (1.0 / g) - s.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs;

    fn state(x: f64, y: f64, z: f64) -> StateOfMotion {
        StateOfMotion::from_velocity(&Velocity3::new(x, y, z).unwrap())
    }

    #[test]
    fn dot_signature() {
        let u = FourVector::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(u.norm_sq(), -1.0 + 4.0 + 9.0 + 16.0);
    }

    #[test]
    fn state_rejects_bad_vectors() {
        assert!(StateOfMotion::new(FourVector::new(1.0, 2.0, 0.0, 0.0)).is_err());
        assert!(StateOfMotion::new(FourVector::new(1.0, 1.0, 0.0, 0.0)).is_err());
        assert!(StateOfMotion::new(FourVector::new(-2.0, 0.0, 0.0, 0.0)).is_err());
        let s = StateOfMotion::new(FourVector::new(2.0, 1.0, 0.0, 0.0)).unwrap();
        assert!((s.vector().norm_sq() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn outer_acts_through_the_metric() {
        let u = FourVector::new(1.0, 2.0, 0.0, -1.0);
        let v = FourVector::new(3.0, 0.5, 1.0, 0.0);
        let w = FourVector::new(-1.0, 1.0, 2.0, 5.0);
        let got = w.transformed(&outer(&u, &v));
        let want = u * v.dot(&w);
        assert!(max_abs(&(got.vec() - want.vec())) < 1e-14);
    }

    #[test]
    fn projectors_split_identity() {
        let s = state(0.3, -0.2, 0.5);
        let (par, perp) = projectors(&s);
        assert!(max_abs(&(par * par - par)) < 1e-13);
        assert!(max_abs(&(perp * perp - perp)) < 1e-13);
        assert!(max_abs(&(par * perp)) < 1e-13);
        let sv = s.vector().transformed(&par);
        assert!(max_abs(&(sv.vec() - s.vector().vec())) < 1e-14);
    }

    #[test]
    fn bracket_of_generators() {
        let got = lie_bracket(&generator(0, 1), &generator(1, 2));
        assert!(max_abs(&(got - generator(0, 2))) < 1e-15);
    }

    #[test]
    fn relative_velocity_is_tangent_and_zero_on_diagonal() {
        let s = state(0.1, 0.2, 0.0);
        let s1 = state(-0.4, 0.0, 0.3);
        let b = relative_velocity(&s, &s1);
        assert!(b.dot(&s.vector()).abs() < 1e-14);
        let g = s.gamma_against(&s1);
        assert!((b.norm_sq() - (1.0 - 1.0 / (g * g))).abs() < 1e-14);
        assert_eq!(relative_velocity(&s, &s), FourVector::zero());
    }

    #[test]
    fn relative_velocity_from_rest_matches_three_velocity() {
        let s1 = state(0.6, 0.0, 0.0);
        let b = relative_velocity(&StateOfMotion::rest(), &s1);
        assert!((b.space() - Vec3::new(0.6, 0.0, 0.0)).norm() < 1e-15);
        assert!(b.time().abs() < 1e-15);
    }
}
