//! Galilei spacetime: boosts `id + v ⊗ τ`, rotations about a chosen state, and the
//! exact sequence `boosts → Galilei group → rotations`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{join_blocks, max_abs, split_blocks, Mat3, Mat4, Vec3};
use crate::lorentz::Rotation3;
use crate::sample::random_rotation;
use crate::tolerance::MATRIX_TOL;

/// A state `(1, u)`: unit time component and spatial velocity `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GalileiState(Vec3);

impl GalileiState {
    pub fn new(u: Vec3) -> Result<Self> {
        if u.iter().all(|x| x.is_finite()) {
            Ok(Self(u))
        } else {
            Err(Error::NonFinite("Galilei state"))
        }
    }

    /// From four components. The time component must be exactly 1.
    pub fn from_components(c: [f64; 4]) -> Result<Self> {
        if c[0] != 1.0 {
            return Err(Error::InvalidArgument("time component of a Galilei state must be 1"));
        }
        Self::new(Vec3::new(c[1], c[2], c[3]))
    }

    pub fn rest() -> Self {
        Self(Vec3::zeros())
    }

    pub fn velocity(&self) -> &Vec3 {
        &self.0
    }

    pub fn components(&self) -> [f64; 4] {
        [1.0, self.0.x, self.0.y, self.0.z]
    }
}

/// A Galilei transformation `[[1, 0], [c, M]]` with `M` a rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GalileiMatrix(Mat4);

impl GalileiMatrix {
    pub fn new(m: Mat4) -> Result<Self> {
        if !m.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("Galilei matrix"));
        }
        let (c, a, _, rot) = split_blocks(&m);
        if (c - 1.0).abs() > MATRIX_TOL || a.amax() > MATRIX_TOL {
            return Err(Error::NotGalilei("time row must be (1, 0, 0, 0)"));
        }
        Rotation3::new(rot).map_err(|_| Error::NotGalilei("spatial block must be a rotation"))?;
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        Self(Mat4::identity())
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn apply(&self, s: &GalileiState) -> GalileiState {
        let (_, _, c, m) = split_blocks(&self.0);
        GalileiState(c + m * s.0)
    }

    pub fn inverse(&self) -> Self {
        let (_, _, c, m) = split_blocks(&self.0);
        let mt = m.transpose();
        Self(join_blocks(1.0, &Vec3::zeros(), &(-(mt * c)), &mt))
    }
}

impl std::ops::Mul for GalileiMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

/// `B(v) = id + v ⊗ τ`.
pub fn galilei_boost(v: &Vec3) -> GalileiMatrix {
    GalileiMatrix(join_blocks(1.0, &Vec3::zeros(), v, &Mat3::identity()))
}

/// Rotation `D` about the state `s`: `s ⊗ τ + D ∘ (id - s ⊗ τ)`. Fixes `s`.
pub fn rotation_embed(s: &GalileiState, d: &Rotation3) -> GalileiMatrix {
    let m = d.matrix();
    GalileiMatrix(join_blocks(1.0, &Vec3::zeros(), &(s.0 - m * s.0), m))
}

/// The rotation part: the spatial block.
pub fn project(g: &GalileiMatrix) -> Rotation3 {
    let (_, _, _, m) = split_blocks(&g.0);
    Rotation3::from_matrix_unchecked(m)
}

/// `g = B(v) σ_s(π(g))` with `v = g s - s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GalileiDecomposition {
    pub velocity: Vec3,
    pub rotation: GalileiMatrix,
}

impl GalileiDecomposition {
    pub fn matrix(&self) -> GalileiMatrix {
        galilei_boost(&self.velocity) * self.rotation
    }
}

/// Split `g` into a boost and a rotation about `s`.
pub fn decompose(g: &GalileiMatrix, s: &GalileiState) -> GalileiDecomposition {
    GalileiDecomposition {
        velocity: g.apply(s).0 - s.0,
        rotation: rotation_embed(s, &project(g)),
    }
}

/// Velocity of the boost carrying `s1` to `s2`. No reference state is involved.
pub fn galilei_link_velocity(s1: &GalileiState, s2: &GalileiState) -> Vec3 {
    s2.0 - s1.0
}

/// Worst residual of each exactness property over a batch of random samples.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ExactSequenceReport {
    /// `B(v₁) B(v₂) = B(v₁ + v₂)`.
    pub boost_homomorphism: f64,
    /// `B(v₁) B(v₂) = B(v₂) B(v₁)`.
    pub boost_abelian: f64,
    /// `|B(v) - id| = |v|`, so only `v = 0` maps to the identity.
    pub boost_injective: f64,
    /// `π(g₁ g₂) = π(g₁) π(g₂)`.
    pub projection_homomorphism: f64,
    /// `π(σ_s(D)) = D`, so `π` is onto.
    pub section: f64,
    /// `π(B(v)) = id`, and `π(g) = id` forces `g = B(g s - s)`.
    pub kernel_is_image: f64,
    /// `g B(v) g⁻¹ = B(π(g) v)`.
    pub normality: f64,
    /// `B(v) σ_s(π(g)) = g`.
    pub round_trip: f64,
    /// `σ_{s'}(D) = B(w) σ_s(D) B(-w)` with `w = s' - s`.
    pub section_conjugation: f64,
}

impl ExactSequenceReport {
    pub fn max(&self) -> f64 {
        [
            self.boost_homomorphism,
            self.boost_abelian,
            self.boost_injective,
            self.projection_homomorphism,
            self.section,
            self.kernel_is_image,
            self.normality,
            self.round_trip,
            self.section_conjugation,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

fn random_vec<R: Rng>(rng: &mut R, span: f64) -> Vec3 {
    Vec3::from_fn(|_, _| rng.random_range(-span..span))
}

/// A random Galilei transformation.
pub fn random_galilei<R: Rng>(rng: &mut R) -> GalileiMatrix {
    let d = random_rotation(rng);
    let c = random_vec(rng, 2.0);
    GalileiMatrix(join_blocks(1.0, &Vec3::zeros(), &c, d.matrix()))
}

/// Check the exact sequence on `n` random samples.
pub fn check_exact_sequence<R: Rng>(rng: &mut R, n: usize) -> Result<ExactSequenceReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample count must be positive"));
    }
    let mut r = ExactSequenceReport::default();
    let id3 = Mat3::identity();
    let diff = |a: &GalileiMatrix, b: &GalileiMatrix| max_abs(&(a.0 - b.0));
    for _ in 0..n {
        let (v1, v2) = (random_vec(rng, 2.0), random_vec(rng, 2.0));
        let (g1, g2) = (random_galilei(rng), random_galilei(rng));
        let s = GalileiState(random_vec(rng, 2.0));
        let s2 = GalileiState(random_vec(rng, 2.0));
        let d = random_rotation(rng);
        let (b1, b2) = (galilei_boost(&v1), galilei_boost(&v2));

        r.boost_homomorphism = r
            .boost_homomorphism
            .max(diff(&(b1 * b2), &galilei_boost(&(v1 + v2))));
        r.boost_abelian = r.boost_abelian.max(diff(&(b1 * b2), &(b2 * b1)));
        r.boost_injective = r
            .boost_injective
            .max((max_abs(&(b1.0 - Mat4::identity())) - v1.amax()).abs());
        r.projection_homomorphism = r.projection_homomorphism.max(max_abs(
            &(project(&(g1 * g2)).matrix() - project(&g1).matrix() * project(&g2).matrix()),
        ));
        r.section = r
            .section
            .max(max_abs(&(project(&rotation_embed(&s, &d)).matrix() - d.matrix())));
        let kernel_elem = b1 * rotation_embed(&s, &Rotation3::identity());
        r.kernel_is_image = r
            .kernel_is_image
            .max(max_abs(&(project(&b1).matrix() - id3)))
            .max(diff(
                &kernel_elem,
                &galilei_boost(&(kernel_elem.apply(&s).0 - s.0)),
            ));
        let lhs = g1 * b1 * g1.inverse();
        r.normality = r
            .normality
            .max(diff(&lhs, &galilei_boost(&(project(&g1).matrix() * v1))));
        r.round_trip = r.round_trip.max(diff(&decompose(&g1, &s).matrix(), &g1));
        let w = s2.0 - s.0;
        let conj = galilei_boost(&w) * rotation_embed(&s, &d) * galilei_boost(&-w);
        r.section_conjugation = r
            .section_conjugation
            .max(diff(&rotation_embed(&s2, &d), &conj));
    }
    Ok(r)
}

/// Residuals for asking whether the decomposition at `s` is a polar decomposition
/// with respect to the Euclidean metric carried to `s` by `B(s - e0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarProbe {
    /// `G B - Bᵀ G` for the boost factor.
    pub boost_asymmetry: f64,
    /// `Rᵀ G R - G` for the rotation factor.
    pub rotation_non_isometry: f64,
}

/// Probe the decomposition of `g` at `s` against the metric `G = B⁻ᵀ B⁻¹`, `B = B(s - e0)`.
pub fn polar_probe(g: &GalileiMatrix, s: &GalileiState) -> PolarProbe {
    let b_inv = galilei_boost(&-s.0).0;
    let metric = b_inv.transpose() * b_inv;
    let dec = decompose(g, s);
    let b = galilei_boost(&dec.velocity).0;
    let r = dec.rotation.0;
    PolarProbe {
        boost_asymmetry: max_abs(&(metric * b - b.transpose() * metric)),
        rotation_non_isometry: max_abs(&(r.transpose() * metric * r - metric)),
    }
}
