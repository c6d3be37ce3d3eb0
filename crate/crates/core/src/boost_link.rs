//! The boost that carries one state of motion to another, seen from a reference state.

use crate::error::{Error, Result};
use crate::linalg::{max_abs, Mat4};
use crate::lorentz::{boost_in_frame, LorentzMatrix};
use crate::minkowski::{outer, wedge, FourVector, StateOfMotion};
use crate::tolerance::{LINK_DEGENERATE_TOL, PLANE_DEGENERATE_TOL};

/// Reference state `s` with two states `s1`, `s2`, and their pairwise Lorentz factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateTriple {
    pub s: StateOfMotion,
    pub s1: StateOfMotion,
    pub s2: StateOfMotion,
    /// `-η(s, s1)`.
    pub gamma1: f64,
    /// `-η(s, s2)`.
    pub gamma2: f64,
    /// `-η(s1, s2)`.
    pub gamma12: f64,
}

impl StateTriple {
    pub fn new(s: StateOfMotion, s1: StateOfMotion, s2: StateOfMotion) -> Self {
        Self {
            gamma1: s.gamma_against(&s1),
            gamma2: s.gamma_against(&s2),
            gamma12: s1.gamma_against(&s2),
            s,
            s1,
            s2,
        }
    }

    /// Same pair of states seen from another reference state.
    pub fn with_reference(&self, s: StateOfMotion) -> Self {
        Self::new(s, self.s1, self.s2)
    }

    /// Same reference, with `s1` and `s2` swapped.
    pub fn swapped(&self) -> Self {
        Self::new(self.s, self.s2, self.s1)
    }

    /// `1 + 2γ₁γ₂ - γ₁₂`, never below 1.
    pub fn denominator(&self) -> f64 {
        1.0 + 2.0 * self.gamma1 * self.gamma2 - self.gamma12
    }

    fn degenerate(&self) -> bool {
        self.gamma12 - 1.0 < LINK_DEGENERATE_TOL
    }
}

/// Everything known about the link from `s1` to `s2` relative to `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkSolution {
    /// Velocity tangent at `s`.
    pub beta: FourVector,
    pub gamma: f64,
    pub boost: LorentzMatrix,
}

/// Lorentz factor of the link boost.
pub fn link_gamma(t: &StateTriple) -> f64 {
    let (g1, g2) = (t.gamma1, t.gamma2);
    ((g1 * g1 + g2 * g2 + t.gamma12 - 1.0) / t.denominator()).max(1.0)
}

/// `(s2 - s1)⊥`, the part of `s2 - s1` orthogonal to `s`.
pub fn perp_difference(t: &StateTriple) -> FourVector {
    t.s2.vector() - t.s1.vector() - t.s.vector() * (t.gamma2 - t.gamma1)
}

/// Velocity of the link boost, tangent at `s`. Exactly zero when `s1 = s2`.
pub fn link_velocity(t: &StateTriple) -> FourVector {
    if t.degenerate() {
        return FourVector::zero();
    }
    let (g1, g2) = (t.gamma1, t.gamma2);
    perp_difference(t) * ((g1 + g2) / (g1 * g1 + g2 * g2 + t.gamma12 - 1.0))
}

/// The boost in the rest frame of `s` that maps `s1` to `s2`. Identity when `s1 = s2`.
pub fn link_boost(t: &StateTriple) -> LorentzMatrix {
    if t.degenerate() {
        return LorentzMatrix::identity();
    }
    let s = t.s.vector();
    let d = t.s2.vector() - t.s1.vector();
    let num = outer(&s, &s) * (2.0 * (1.0 - t.gamma12)) + outer(&d, &d)
        + outer(&s, &d) * (2.0 * t.gamma1)
        - outer(&d, &s) * (2.0 * t.gamma2);
    LorentzMatrix::from_matrix_unchecked(Mat4::identity() + num / t.denominator())
}

/// Link velocity, factor and boost together.
pub fn solve(t: &StateTriple) -> LinkSolution {
    LinkSolution {
        beta: link_velocity(t),
        gamma: link_gamma(t),
        boost: link_boost(t),
    }
}

/// The link boost assembled from its unit direction and speed.
///
/// An independent route to [`link_boost`]: the direction is
/// `√((γ+1)/(γ-1)) (s2 - s1)⊥ / (γ₁ + γ₂)` and the boost is built in the rest frame of `s`.
pub fn link_boost_constructive(t: &StateTriple) -> Result<LorentzMatrix> {
    if t.degenerate() {
        return Ok(LorentzMatrix::identity());
    }
    let g = link_gamma(t);
    let n = perp_difference(t) * (((g + 1.0) / (g - 1.0)).sqrt() / (t.gamma1 + t.gamma2));
    let speed = ((g - 1.0) * (g + 1.0)).sqrt() / g;
    boost_in_frame(&t.s, &(n * speed))
}

/// The pure boost in the plane of `s` and `s1` taking `s` to `s1`.
///
/// It sends `s1` to `2γ s1 - s` and fixes the orthogonal complement of the plane.
pub fn geodesic_boost(s: &StateOfMotion, s1: &StateOfMotion) -> LorentzMatrix {
    let g = s.gamma_against(s1);
    let (a, b) = (s.vector(), s1.vector());
    let num = outer(&a, &a) + outer(&b, &b) + wedge(&a, &b) - outer(&b, &a) * (2.0 * g);
    LorentzMatrix::from_matrix_unchecked(Mat4::identity() + num / (g + 1.0))
}

/// Orthogonal projector onto the plane spanned by two distinct states.
pub fn plane_projector(s1: &StateOfMotion, s2: &StateOfMotion) -> Result<Mat4> {
    let g = s1.gamma_against(s2);
    if g - 1.0 < PLANE_DEGENERATE_TOL {
        return Err(Error::DegeneratePlane(g - 1.0));
    }
    let (a, b) = (s1.vector(), s2.vector());
    let num = outer(&a, &a) + outer(&b, &b) - (outer(&a, &b) + outer(&b, &a)) * g;
    Ok(num / ((g - 1.0) * (g + 1.0)))
}

/// Squared norm of the part of `s` orthogonal to the plane of `s1` and `s2`.
pub fn orthogonal_tilt_sq(t: &StateTriple) -> Result<f64> {
    let (g1, g2, g12) = (t.gamma1, t.gamma2, t.gamma12);
    if g12 - 1.0 < PLANE_DEGENERATE_TOL {
        return Err(Error::DegeneratePlane(g12 - 1.0));
    }
    let num = 1.0 - g1 * g1 - g2 * g2 - g12 * g12 + 2.0 * g1 * g2 * g12;
    Ok((num / ((g12 - 1.0) * (g12 + 1.0))).max(0.0))
}

/// Link factor written through the tilt of `s` out of the plane of `s1`, `s2`.
pub fn tilt_gamma(t: &StateTriple) -> Result<f64> {
    let tilt = orthogonal_tilt_sq(t)?;
    let g12 = t.gamma12;
    Ok(g12 - tilt * (g12 - 1.0) * (g12 + 1.0) / t.denominator())
}

/// Smallest `γ*` for which a reference state equidistant from `s1` and `s2` exists.
pub fn min_symmetric_gamma(gamma12: f64) -> f64 {
    ((1.0 + gamma12) / 2.0).sqrt()
}

/// Link factor for a reference state with `γ₁ = γ₂ = γ*`.
pub fn tilt_gamma_symmetric(gamma12: f64, gamma_star: f64) -> Result<f64> {
    check_gamma12(gamma12)?;
    let min = min_symmetric_gamma(gamma12);
    if !gamma_star.is_finite() || gamma_star < min * (1.0 - 1e-12) {
        return Err(Error::InvalidArgument(
            "gamma_star is below the smallest reachable symmetric value",
        ));
    }
    let q = 2.0 * gamma_star * gamma_star;
    Ok(((q + gamma12 - 1.0) / (q - gamma12 + 1.0)).min(gamma12))
}

/// Link factor for a reference state on the geodesic bisector, parametrised by the
/// angle `φ ∈ [0, π]` its relative velocities to `s1` and `s2` make.
pub fn tilt_gamma_angle(gamma12: f64, phi: f64) -> Result<f64> {
    check_gamma12(gamma12)?;
    if !(0.0..=std::f64::consts::PI).contains(&phi) {
        return Err(Error::InvalidArgument("phi must lie in [0, pi]"));
    }
    let c = phi.cos();
    Ok((gamma12 * (3.0 - c) - c - 1.0) / (gamma12 * (1.0 + c) - 3.0 * c + 1.0))
}

fn check_gamma12(g: f64) -> Result<()> {
    if !g.is_finite() {
        return Err(Error::NonFinite("gamma12"));
    }
    if g < 1.0 {
        return Err(Error::GammaBelowOne(g));
    }
    Ok(())
}

/// Which one-parameter family of reference states a tilt scan walks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TiltParametrization {
    /// `γ*` from its minimum up to `upper`. The link factor falls from `γ₁₂` towards 1.
    GammaStar { upper: f64 },
    /// `φ` from 0 to π. The link factor rises from 1 to `γ₁₂`.
    Angle,
}

/// Sample the link factor along a family of reference states. Both endpoints are included.
pub fn tilt_scan(gamma12: f64, param: TiltParametrization, samples: usize) -> Result<Vec<(f64, f64)>> {
    check_gamma12(gamma12)?;
    if samples < 2 {
        return Err(Error::InvalidArgument("a scan needs at least two samples"));
    }
    let last = (samples - 1) as f64;
    match param {
        TiltParametrization::GammaStar { upper } => {
            let lo = min_symmetric_gamma(gamma12);
            if !upper.is_finite() || upper <= lo {
                return Err(Error::InvalidArgument(
                    "upper bound must exceed the smallest symmetric gamma",
                ));
            }
            (0..samples)
                .map(|i| {
                    let x = if i + 1 == samples {
                        upper
                    } else {
                        lo + (upper - lo) * (i as f64 / last)
                    };
                    let g = if i == 0 {
                        gamma12
                    } else {
                        tilt_gamma_symmetric(gamma12, x)?
                    };
                    Ok((x, g))
                })
                .collect()
        }
        TiltParametrization::Angle => (0..samples)
            .map(|i| {
                let phi = if i + 1 == samples {
                    std::f64::consts::PI
                } else {
                    std::f64::consts::PI * (i as f64 / last)
                };
                Ok((phi, tilt_gamma_angle(gamma12, phi)?))
            })
            .collect(),
    }
}

/// Residual of `link_velocity(L s, L s1, L s2) = L link_velocity(s, s1, s2)`,
/// relative to the largest entry of `L`.
pub fn check_equivariance(t: &StateTriple, l: &LorentzMatrix) -> f64 {
    let moved = StateTriple::new(t.s.transformed(l), t.s1.transformed(l), t.s2.transformed(l));
    let lhs = link_velocity(&moved);
    let rhs = l.apply(&link_velocity(t));
    (lhs - rhs).max_abs() / max_abs(l.matrix()).max(1.0)
}
