//! Relativistic kinematics in Minkowski space.
//!
//! * [`minkowski`]: four-vectors, states of motion, tensor and wedge products.
//! * [`lorentz`]: velocities, rotations, boosts and the polar decomposition.
//! * [`velocity`]: Einstein addition `⊕` and the Thomas rotation.
//! * [`loops`]: the loop axioms of `⊕` and the Benz conditions.
//! * [`boost_link`]: the boost carrying one state to another relative to a reference state.
//! * [`hyperbolic`]: exponential map, distance, geodesics and parallel transport.
//! * [`galilei`]: the Galilei group and its boost-rotation decomposition.
//!
//! ```
//! use relkin::lorentz::Velocity3;
//! use relkin::velocity::{einstein_add, thomas_rotation};
//!
//! let a = Velocity3::new(0.8, 0.0, 0.0)?;
//! let b = Velocity3::new(0.0, 0.8, 0.0)?;
//! let sum = einstein_add(&a, &b)?;
//! assert!((sum.vec().y - 0.48).abs() < 1e-15);
//! let t = thomas_rotation(&a, &b);
//! assert!((t.angle.cos() - 15.0 / 17.0).abs() < 1e-15);
//! # Ok::<(), relkin::Error>(())
//! ```

pub mod boost_link;
pub mod error;
pub mod galilei;
pub mod hyperbolic;
pub mod linalg;
pub mod loops;
pub mod lorentz;
pub mod minkowski;
pub mod sample;
pub mod tolerance;
pub mod velocity;

pub use error::{Error, Result};
pub use lorentz::{LorentzMatrix, Rotation3, Velocity3};
pub use minkowski::{FourVector, StateOfMotion};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/states.md")]
    pub mod states {}
    #[doc = include_str!("../../../book/src/boosts.md")]
    pub mod boosts {}
    #[doc = include_str!("../../../book/src/velocity_addition.md")]
    pub mod velocity_addition {}
    #[doc = include_str!("../../../book/src/boost_link.md")]
    pub mod boost_link {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    pub mod geometry {}
    #[doc = include_str!("../../../book/src/galilei.md")]
    pub mod galilei {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
