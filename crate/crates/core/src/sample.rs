//! Random velocities, rotations and states for property checks.

use nalgebra::{Quaternion, UnitQuaternion};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal, UnitSphere};

use crate::linalg::Vec3;
use crate::lorentz::{boost, embed_rotation, LorentzMatrix, Rotation3, Velocity3};
use crate::minkowski::StateOfMotion;
use crate::tolerance::gamma_limit;

/// How sampled velocities are oriented.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Orientation {
    /// Uniform direction on the sphere.
    Isotropic,
    /// Parallel or antiparallel to a fixed unit axis.
    Collinear(Vec3),
}

/// Velocities with uniform direction and Lorentz factor log-uniform in `[1, gamma_max]`.
#[derive(Debug, Clone)]
pub struct VelocitySampler<R> {
    rng: R,
    gamma_max: f64,
    orientation: Orientation,
}

impl<R: Rng> VelocitySampler<R> {
    pub const DEFAULT_GAMMA_MAX: f64 = 1e3;

    /// Range used for the loop axioms. Residuals in velocity coordinates grow like
    /// `ε γ²` near the light cone, and this keeps them well under the axiom tolerance.
    pub const LOOP_GAMMA_MAX: f64 = 50.0;

    pub fn new(rng: R) -> Self {
        Self::with_gamma_max(rng, Self::DEFAULT_GAMMA_MAX)
    }

    /// # Panics
    /// If `gamma_max` is not a finite value in `[1, gamma_limit()]`.
    pub fn with_gamma_max(rng: R, gamma_max: f64) -> Self {
        assert!(
            (1.0..=gamma_limit()).contains(&gamma_max),
            "gamma_max must lie in [1, {}]",
            gamma_limit()
        );
        Self {
            rng,
            gamma_max,
            orientation: Orientation::Isotropic,
        }
    }

    pub fn collinear(mut self, axis: Vec3) -> Self {
        self.orientation = Orientation::Collinear(axis.normalize());
        self
    }

    pub fn gamma_max(&self) -> f64 {
        self.gamma_max
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn rng(&mut self) -> &mut R {
        &mut self.rng
    }

    pub fn gamma(&mut self) -> f64 {
        let u: f64 = self.rng.random();
        (u * self.gamma_max.ln()).exp()
    }

    pub fn direction(&mut self) -> Vec3 {
        match self.orientation {
            Orientation::Isotropic => Vec3::from(UnitSphere.sample(&mut self.rng)),
            Orientation::Collinear(axis) => {
                if self.rng.random::<bool>() {
                    axis
                } else {
                    -axis
                }
            }
        }
    }

    pub fn velocity(&mut self) -> Velocity3 {
        let g = self.gamma();
        let speed = ((g - 1.0) * (g + 1.0)).sqrt() / g;
        let dir = self.direction();
        Velocity3::from_vec(dir * speed).expect("sampled speed is below the limit")
    }

    /// A pair whose compositions stay representable.
    pub fn pair(&mut self) -> (Velocity3, Velocity3) {
        loop {
            let (a, b) = (self.velocity(), self.velocity());
            if 2.0 * a.gamma() * b.gamma() <= gamma_limit() / 2.0 {
                return (a, b);
            }
        }
    }

    /// A triple whose nested compositions stay representable.
    pub fn triple(&mut self) -> (Velocity3, Velocity3, Velocity3) {
        loop {
            let (a, b, c) = (self.velocity(), self.velocity(), self.velocity());
            if 4.0 * a.gamma() * b.gamma() * c.gamma() <= gamma_limit() / 2.0 {
                return (a, b, c);
            }
        }
    }

    pub fn rotation(&mut self) -> Rotation3 {
        random_rotation(&mut self.rng)
    }

    pub fn state(&mut self) -> StateOfMotion {
        StateOfMotion::from_velocity(&self.velocity())
    }

    /// `B(β) R(D)` with both factors sampled.
    pub fn lorentz(&mut self) -> LorentzMatrix {
        let b = self.velocity();
        let d = self.rotation();
        boost(&b) * embed_rotation(&d)
    }
}

/// Uniform rotation, from a uniform unit quaternion.
pub fn random_rotation<R: Rng>(rng: &mut R) -> Rotation3 {
    let n: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(rng));
    let q = UnitQuaternion::from_quaternion(Quaternion::new(n[0], n[1], n[2], n[3]));
    Rotation3::new(q.to_rotation_matrix().into_inner()).expect("unit quaternion gives a rotation")
}
