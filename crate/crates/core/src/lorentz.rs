//! Lorentz matrices in block form `[[c, aᵀ], [b, M]]` and their boost-rotation factorisation.

use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::linalg::{
    eta, join_blocks, max_abs, split_blocks, symmetric_inv_sqrt, symmetric_sqrt, Mat3, Mat4, Vec3,
};
use crate::minkowski::{outer, FourVector, StateOfMotion};
use crate::tolerance::{MATRIX_TOL, MAX_SPEED, NORM_TOL};
use crate::velocity::{einstein_add, thomas_rotation};

/// A 3-velocity strictly inside the unit ball (units with `c = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Velocity3(Vec3);

impl Velocity3 {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_vec(Vec3::new(x, y, z))
    }

    pub fn from_vec(v: Vec3) -> Result<Self> {
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("velocity"));
        }
        let speed = v.norm();
        if speed > MAX_SPEED {
            return Err(Error::NearLightlike {
                speed,
                limit: MAX_SPEED,
            });
        }
        Ok(Self(v))
    }

    /// Speed `|β|` with direction `dir` (normalised here).
    pub fn from_speed(dir: &Vec3, speed: f64) -> Result<Self> {
        let n = dir.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidArgument("direction must be a non-zero finite vector"));
        }
        Self::from_vec(dir * (speed / n))
    }

    pub fn zero() -> Self {
        Self(Vec3::zeros())
    }

    pub fn vec(&self) -> &Vec3 {
        &self.0
    }

    pub fn components(&self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn gamma(&self) -> f64 {
        let b = self.norm();
        1.0 / ((1.0 - b) * (1.0 + b)).sqrt()
    }

    /// `γ - 1`, computed without cancellation.
    pub fn gamma_minus_one(&self) -> f64 {
        let g = self.gamma();
        g * g * self.0.norm_squared() / (1.0 + g)
    }

    pub fn rapidity(&self) -> Rapidity {
        Rapidity(self.norm().atanh())
    }

    pub fn rotated(&self, d: &Rotation3) -> Self {
        Self(d.matrix() * self.0)
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.dot(&other.0)
    }
}

impl Neg for Velocity3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

/// Rapidity `ρ = atanh |β|`, so that `cosh ρ = γ`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Rapidity(pub f64);

impl Rapidity {
    pub fn gamma(&self) -> f64 {
        self.0.cosh()
    }

    pub fn speed(&self) -> f64 {
        self.0.tanh()
    }
}

/// A proper rotation of Euclidean 3-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3(Mat3);

impl Rotation3 {
    pub fn new(m: Mat3) -> Result<Self> {
        if !m.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("rotation"));
        }
        let r = Self(m);
        let orth = r.drift();
        let det = m.determinant();
        if orth > MATRIX_TOL || (det - 1.0).abs() > MATRIX_TOL {
            return Err(Error::NotRotation {
                orthogonality: orth,
                det,
            });
        }
        Ok(r)
    }

    pub(crate) fn from_matrix_unchecked(m: Mat3) -> Self {
        Self(m)
    }

    pub fn identity() -> Self {
        Self(Mat3::identity())
    }

    /// Right-handed rotation by `angle` about `axis`.
    pub fn about_axis(axis: &Vec3, angle: f64) -> Result<Self> {
        let n = axis.norm();
        if n == 0.0 || !n.is_finite() || !angle.is_finite() {
            return Err(Error::InvalidArgument("rotation axis must be a non-zero finite vector"));
        }
        let k = crate::linalg::skew(&(axis / n));
        Ok(Self(
            Mat3::identity() + k * angle.sin() + k * k * (1.0 - angle.cos()),
        ))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.transpose())
    }

    /// `max |DᵀD - I|`.
    pub fn drift(&self) -> f64 {
        max_abs(&(self.0.transpose() * self.0 - Mat3::identity()))
    }

    /// Rotation angle in `[0, π]`.
    pub fn angle(&self) -> f64 {
        ((self.0.trace() - 1.0) / 2.0).clamp(-1.0, 1.0).acos()
    }
}

impl Mul for Rotation3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

/// A proper orthochronous Lorentz matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMatrix(Mat4);

impl LorentzMatrix {
    /// Validate `LᵀηL = η`, `L₀₀ ≥ 1` and `det L > 0`.
    ///
    /// The metric residual is measured relative to `max(1, L₀₀²)`, the size of the
    /// largest entries of `LᵀηL`.
    pub fn new(m: Mat4) -> Result<Self> {
        if !m.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("Lorentz matrix"));
        }
        let c = m[(0, 0)];
        let metric = metric_residual(&m) / c.abs().max(1.0).powi(2);
        if metric > MATRIX_TOL || c < 1.0 - MATRIX_TOL || m.determinant() <= 0.0 {
            return Err(Error::NotLorentz { metric, time: c });
        }
        Ok(Self(m))
    }

    pub(crate) fn from_matrix_unchecked(m: Mat4) -> Self {
        Self(m)
    }

    pub fn identity() -> Self {
        Self(Mat4::identity())
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    /// `η Lᵀ η`.
    pub fn inverse(&self) -> Self {
        let e = eta();
        Self(e * self.0.transpose() * e)
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        v.transformed(&self.0)
    }

    pub fn metric_residual(&self) -> f64 {
        metric_residual(&self.0)
    }
}

impl Mul for LorentzMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

fn metric_residual(m: &Mat4) -> f64 {
    let e = eta();
    max_abs(&(m.transpose() * e * m - e))
}

/// Pure boost taking `e0` to `γ (1, β)`.
pub fn boost(beta: &Velocity3) -> LorentzMatrix {
    let g = beta.gamma();
    let b = beta.vec();
    let m = Mat3::identity() + b * b.transpose() * (g * g / (1.0 + g));
    LorentzMatrix(join_blocks(g, &(b * g), &(b * g), &m))
}

/// Pure boost in the rest frame of `s` with velocity `beta` tangent at `s`.
///
/// Maps `s` to `γ (s + β)` and fixes every vector orthogonal to both.
pub fn boost_in_frame(s: &StateOfMotion, beta: &FourVector) -> Result<LorentzMatrix> {
    let sv = s.vector();
    let scale = beta.max_abs().max(1.0) * sv.max_abs();
    let orth = beta.dot(&sv);
    if orth.abs() > NORM_TOL * scale {
        return Err(Error::NotTangent(orth));
    }
    let b2 = beta.norm_sq();
    if b2 < 0.0 || b2.sqrt() > MAX_SPEED {
        return Err(Error::NearLightlike {
            speed: b2.max(0.0).sqrt(),
            limit: MAX_SPEED,
        });
    }
    let g = 1.0 / (1.0 - b2).sqrt();
    let k = g * g / (1.0 + g);
    let m = Mat4::identity() + (outer(beta, beta) - outer(&sv, &sv) * b2) * k
        + (outer(&sv, beta) - outer(beta, &sv)) * g;
    Ok(LorentzMatrix(m))
}

/// Rotation acting on the spatial block, `block(1, D)`.
pub fn embed_rotation(d: &Rotation3) -> LorentzMatrix {
    LorentzMatrix(join_blocks(1.0, &Vec3::zeros(), &Vec3::zeros(), d.matrix()))
}

/// Residuals of the six block relations satisfied by every Lorentz matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockReport {
    /// `|b|² - (c² - 1)`.
    pub b_norm: f64,
    /// `Mᵀb - c a`.
    pub mt_b: f64,
    /// `MᵀM - (I + a aᵀ)`.
    pub mt_m: f64,
    /// `|a|² - (c² - 1)`.
    pub a_norm: f64,
    /// `M a - c b`.
    pub m_a: f64,
    /// `M Mᵀ - (I + b bᵀ)`.
    pub m_mt: f64,
}

impl BlockReport {
    pub fn max(&self) -> f64 {
        [
            self.b_norm,
            self.mt_b,
            self.mt_m,
            self.a_norm,
            self.m_a,
            self.m_mt,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Evaluate both sets of block relations on an arbitrary matrix.
pub fn validate_blocks(l: &Mat4) -> BlockReport {
    let (c, a, b, m) = split_blocks(l);
    let id = Mat3::identity();
    BlockReport {
        b_norm: (b.norm_squared() - (c * c - 1.0)).abs(),
        mt_b: (m.transpose() * b - a * c).amax(),
        mt_m: max_abs(&(m.transpose() * m - id - a * a.transpose())),
        a_norm: (a.norm_squared() - (c * c - 1.0)).abs(),
        m_a: (m * a - b * c).amax(),
        m_mt: max_abs(&(m * m.transpose() - id - b * b.transpose())),
    }
}

/// Factors of `L = B(β) R(D) = R(D) B(β')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarFactors {
    pub beta: Velocity3,
    pub rotation: Rotation3,
    pub beta_reversed: Velocity3,
}

impl PolarFactors {
    pub fn gamma(&self) -> f64 {
        self.beta.gamma()
    }

    /// `B(β) R(D)`.
    pub fn matrix(&self) -> LorentzMatrix {
        boost(&self.beta) * embed_rotation(&self.rotation)
    }
}

/// Closed-form polar decomposition read off the blocks of `L`.
pub fn polar_decompose(l: &LorentzMatrix) -> Result<PolarFactors> {
    let (c, a, b, m) = split_blocks(&l.0);
    let g = c.max(1.0);
    let beta = Velocity3::from_vec(b / g)?;
    let beta_reversed = Velocity3::from_vec(a / g)?;
    let d = m - b * a.transpose() / (g + 1.0);
    Ok(PolarFactors {
        beta,
        rotation: Rotation3::from_matrix_unchecked(d),
        beta_reversed,
    })
}

/// Polar factors computed as `B = √(L Lᵀ)` and `R = B⁻¹ L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqrtPolar {
    pub boost: Mat4,
    pub rotation: Mat4,
}

impl SqrtPolar {
    /// Velocity and rotation read from the two factors.
    pub fn factors(&self) -> Result<(Velocity3, Rotation3)> {
        let (c, _, b, _) = split_blocks(&self.boost);
        let beta = Velocity3::from_vec(b / c)?;
        let (_, _, _, d) = split_blocks(&self.rotation);
        Ok((beta, Rotation3::from_matrix_unchecked(d)))
    }
}

/// Polar decomposition through the symmetric square root of `L Lᵀ`.
pub fn polar_decompose_sqrt(l: &Mat4) -> Result<SqrtPolar> {
    let llt = l * l.transpose();
    let boost = symmetric_sqrt(&llt)?;
    let rotation = symmetric_inv_sqrt(&llt)? * l;
    Ok(SqrtPolar { boost, rotation })
}

/// A Lorentz transformation held as its polar pair `(β, D)`, meaning `B(β) R(D)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostRotation {
    pub beta: Velocity3,
    pub rotation: Rotation3,
}

impl BoostRotation {
    pub fn matrix(&self) -> LorentzMatrix {
        boost(&self.beta) * embed_rotation(&self.rotation)
    }
}

/// Product `(β₁, D₁)(β₂, D₂) = (β₁ ⊕ D₁β₂, T[β₁, D₁β₂] D₁ D₂)`.
pub fn compose(first: &BoostRotation, second: &BoostRotation) -> Result<BoostRotation> {
    let moved = second.beta.rotated(&first.rotation);
    let beta = einstein_add(&first.beta, &moved)?;
    let t = thomas_rotation(&first.beta, &moved);
    Ok(BoostRotation {
        beta,
        rotation: t.rotation * first.rotation * second.rotation,
    })
}

/// `(β, D)⁻¹ = (-D⁻¹β, D⁻¹)`.
pub fn invert(l: &BoostRotation) -> BoostRotation {
    let d_inv = l.rotation.inverse();
    BoostRotation {
        beta: -l.beta.rotated(&d_inv),
        rotation: d_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: f64, y: f64, z: f64) -> Velocity3 {
        Velocity3::new(x, y, z).unwrap()
    }

    #[test]
    fn velocity_guard() {
        assert!(Velocity3::new(1.0, 0.0, 0.0).is_err());
        assert!(Velocity3::new(0.6, 0.8, 0.0).is_err());
        assert!(Velocity3::new(f64::NAN, 0.0, 0.0).is_err());
        assert!(Velocity3::new(0.6, 0.0, 0.0).is_ok());
    }

    #[test]
    fn boost_is_lorentz_and_moves_rest_state() {
        let b = v(0.3, -0.5, 0.6);
        let l = boost(&b);
        assert!(LorentzMatrix::new(*l.matrix()).is_ok());
        let s = l.apply(&FourVector::basis(0));
        let want = StateOfMotion::from_velocity(&b).vector();
        assert!((s.vec() - want.vec()).amax() < 1e-14);
        assert!(validate_blocks(l.matrix()).max() < 1e-14);
    }

    #[test]
    fn boost_eigenvalues() {
        let l = boost(&v(0.6, 0.0, 0.0));
        let e = crate::linalg::jacobi_eigen(l.matrix()).unwrap();
        let mut vals: Vec<f64> = e.values.iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        let want = [0.5, 1.0, 1.0, 2.0];
        for (g, w) in vals.iter().zip(want) {
            assert!((g - w).abs() < 1e-13);
        }
    }

    #[test]
    fn lorentz_rejects_non_isometries() {
        let mut m = Mat4::identity();
        m[(1, 1)] = 2.0;
        assert!(LorentzMatrix::new(m).is_err());
        let mut p = Mat4::identity();
        p[(0, 0)] = -1.0;
        assert!(LorentzMatrix::new(p).is_err());
        let mut q = Mat4::identity();
        q[(1, 1)] = -1.0;
        assert!(LorentzMatrix::new(q).is_err());
    }

    #[test]
    fn polar_round_trip() {
        let d = Rotation3::about_axis(&Vec3::new(1.0, 2.0, -0.5), 0.7).unwrap();
        let b = v(0.2, 0.4, -0.1);
        let l = boost(&b) * embed_rotation(&d);
        let f = polar_decompose(&l).unwrap();
        assert!((f.beta.vec() - b.vec()).amax() < 1e-14);
        assert!(max_abs(&(f.rotation.matrix() - d.matrix())) < 1e-14);
        let bp = b.rotated(&d.inverse());
        assert!((f.beta_reversed.vec() - bp.vec()).amax() < 1e-14);
        let again = embed_rotation(&d) * boost(&f.beta_reversed);
        assert!(max_abs(&(again.matrix() - l.matrix())) < 1e-14);
    }

    #[test]
    fn sqrt_route_agrees() {
        let d = Rotation3::about_axis(&Vec3::new(0.0, 1.0, 1.0), -1.1).unwrap();
        let b = v(-0.7, 0.1, 0.3);
        let l = boost(&b) * embed_rotation(&d);
        let sp = polar_decompose_sqrt(l.matrix()).unwrap();
        assert!(max_abs(&(sp.boost - boost(&b).matrix())) < 1e-12);
        assert!(max_abs(&(sp.rotation - embed_rotation(&d).matrix())) < 1e-12);
    }

    #[test]
    fn frame_boost_at_rest_is_standard_boost() {
        let b = v(0.1, -0.6, 0.2);
        let beta = FourVector::from_parts(0.0, b.vec());
        let l = boost_in_frame(&StateOfMotion::rest(), &beta).unwrap();
        assert!(max_abs(&(l.matrix() - boost(&b).matrix())) < 1e-14);
    }

    #[test]
    fn frame_boost_rejects_non_tangent() {
        let beta = FourVector::new(0.1, 0.2, 0.0, 0.0);
        assert!(boost_in_frame(&StateOfMotion::rest(), &beta).is_err());
    }

    #[test]
    fn compose_matches_matrix_product() {
        let a = BoostRotation {
            beta: v(0.5, 0.2, 0.0),
            rotation: Rotation3::about_axis(&Vec3::z(), 0.3).unwrap(),
        };
        let b = BoostRotation {
            beta: v(-0.1, 0.6, 0.4),
            rotation: Rotation3::about_axis(&Vec3::x(), -1.2).unwrap(),
        };
        let c = compose(&a, &b).unwrap();
        let want = a.matrix() * b.matrix();
        assert!(max_abs(&(c.matrix().matrix() - want.matrix())) < 1e-13);
        let id = compose(&a, &invert(&a)).unwrap();
        assert!(id.beta.norm() < 1e-15);
        assert!(max_abs(&(id.rotation.matrix() - Mat3::identity())) < 1e-14);
    }
}
