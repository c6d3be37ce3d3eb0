//! The unit hyperboloid of states as a model of hyperbolic 3-space.

use crate::error::{Error, Result};
use crate::linalg::{max_abs, Mat4};
use crate::lorentz::{LorentzMatrix, Velocity3};
use crate::minkowski::{wedge, FourVector, StateOfMotion};
use crate::tolerance::{NORM_TOL, SERIES_MAX_TERMS, SERIES_TERM_TOL};

fn check_unit_tangent(s: &StateOfMotion, n: &FourVector) -> Result<()> {
    let norm = (n.norm_sq() - 1.0).abs();
    let orth = n.dot(&s.vector()).abs();
    let scale = n.max_abs().max(1.0) * s.vector().max_abs();
    if norm > NORM_TOL * scale * scale || orth > NORM_TOL * scale {
        return Err(Error::NotUnitTangent { norm, orth });
    }
    Ok(())
}

/// `exp(ρ s∧n)` summed as a power series.
///
/// Stops once a term falls below the series tolerance in the max norm.
pub fn boost_exp(s: &StateOfMotion, n: &FourVector, rho: f64) -> Result<LorentzMatrix> {
    check_unit_tangent(s, n)?;
    if !rho.is_finite() {
        return Err(Error::NonFinite("rapidity"));
    }
    let a = wedge(&s.vector(), n) * rho;
    let mut term = Mat4::identity();
    let mut sum = Mat4::identity();
    for k in 1..SERIES_MAX_TERMS {
        term = term * a / k as f64;
        sum += term;
        if max_abs(&term) < SERIES_TERM_TOL {
            break;
        }
    }
    Ok(LorentzMatrix::from_matrix_unchecked(sum))
}

/// `P⊥ + cosh ρ P∥ + sinh ρ s∧n`, where the projectors refer to the plane of `s` and `n`.
pub fn boost_exp_closed(s: &StateOfMotion, n: &FourVector, rho: f64) -> Result<LorentzMatrix> {
    check_unit_tangent(s, n)?;
    let w = wedge(&s.vector(), n);
    let par = w * w;
    let perp = Mat4::identity() - par;
    Ok(LorentzMatrix::from_matrix_unchecked(
        perp + par * rho.cosh() + w * rho.sinh(),
    ))
}

/// Hyperbolic distance between the states with velocities `b1` and `b2`.
///
/// Equals `arccosh(γ₁γ₂(1 - β₁·β₂))`, evaluated as `2 asinh(|s₁ - s₂| / 2)` so that
/// nearby states keep full relative precision.
pub fn hyperbolic_distance(b1: &Velocity3, b2: &Velocity3) -> f64 {
    let s1 = StateOfMotion::from_velocity(b1).vector();
    let s2 = StateOfMotion::from_velocity(b2).vector();
    state_distance_vectors(&s1, &s2)
}

/// Hyperbolic distance between two states.
pub fn state_distance(s1: &StateOfMotion, s2: &StateOfMotion) -> f64 {
    state_distance_vectors(&s1.vector(), &s2.vector())
}

fn state_distance_vectors(s1: &FourVector, s2: &FourVector) -> f64 {
    let d = *s1 - *s2;
    let chord_sq = d.norm_sq();
    debug_assert!(chord_sq > -1e-9 * s1.max_abs() * s2.max_abs());
    2.0 * (chord_sq.max(0.0).sqrt() / 2.0).asinh()
}

/// Unit-speed geodesic from `s1` through `s2`: `cosh σ s1 + sinh σ u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicPath {
    pub start: StateOfMotion,
    pub end: StateOfMotion,
    /// Unit tangent at `start` pointing towards `end`. Zero when the states coincide.
    pub tangent: FourVector,
    /// Rapidity separating the endpoints, `arccosh γ₁₂`.
    pub length: f64,
}

impl GeodesicPath {
    pub fn new(start: StateOfMotion, end: StateOfMotion) -> Self {
        let length = state_distance(&start, &end);
        let g = start.gamma_against(&end);
        let dir = end.vector() - start.vector() * g;
        let norm = dir.norm_sq().max(0.0).sqrt();
        let tangent = if norm > 0.0 && length > 0.0 {
            dir * (1.0 / norm)
        } else {
            FourVector::zero()
        };
        Self {
            start,
            end,
            tangent,
            length,
        }
    }

    pub fn point(&self, sigma: f64) -> FourVector {
        self.start.vector() * sigma.cosh() + self.tangent * sigma.sinh()
    }

    pub fn velocity(&self, sigma: f64) -> FourVector {
        self.start.vector() * sigma.sinh() + self.tangent * sigma.cosh()
    }
}

/// Transport `y` along `path` by integrating `dY/dσ = η(Y, γ') γ` with classical RK4.
pub fn parallel_transport_numeric(path: &GeodesicPath, y: &FourVector, steps: usize) -> Result<FourVector> {
    if steps == 0 {
        return Err(Error::InvalidArgument("step count must be positive"));
    }
    let s = path.start.vector();
    let scale = y.max_abs().max(1.0) * s.max_abs();
    let orth = y.dot(&s);
    if orth.abs() > 1e-10 * scale {
        return Err(Error::NotTangent(orth));
    }
    let rhs = |sigma: f64, y: &FourVector| path.point(sigma) * y.dot(&path.velocity(sigma));
    let h = path.length / steps as f64;
    let mut cur = *y;
    for i in 0..steps {
        let t = i as f64 * h;
        let k1 = rhs(t, &cur);
        let k2 = rhs(t + h / 2.0, &(cur + k1 * (h / 2.0)));
        let k3 = rhs(t + h / 2.0, &(cur + k2 * (h / 2.0)));
        let k4 = rhs(t + h, &(cur + k3 * h));
        cur = cur + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
    Ok(cur)
}
