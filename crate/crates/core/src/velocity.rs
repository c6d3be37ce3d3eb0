//! Einstein velocity addition and the Thomas rotation.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{skew, Mat3, Vec3};
use crate::lorentz::{Rotation3, Velocity3};

/// `β₁ ⊕ β₂`, the velocity of `B(β₁) B(β₂) e0`.
///
/// Uses the cross-product form, which never divides by `|β₁|`.
pub fn einstein_add(b1: &Velocity3, b2: &Velocity3) -> Result<Velocity3> {
    let (u, v) = (b1.vec(), b2.vec());
    let g1 = b1.gamma();
    let num = u + v + u.cross(&u.cross(v)) * (g1 / (1.0 + g1));
    Velocity3::from_vec(num / (1.0 + u.dot(v)))
}

/// `γ(β₁ ⊕ β₂) = γ₁ γ₂ (1 + β₁·β₂)`.
pub fn gamma_compose(b1: &Velocity3, b2: &Velocity3) -> f64 {
    b1.gamma() * b2.gamma() * (1.0 + b1.dot(b2))
}

/// Velocity of `b` as seen by an observer moving with `b1`: `(-β₁) ⊕ β`.
pub fn velocity_difference(b: &Velocity3, b1: &Velocity3) -> Result<Velocity3> {
    einstein_add(&-*b1, b)
}

/// The unique `x` with `x ⊕ β₂ = β₃`.
pub fn solve_left(b3: &Velocity3, b2: &Velocity3) -> Result<Velocity3> {
    let t = thomas_rotation(b3, b2);
    einstein_add(b3, &-b2.rotated(&t.rotation))
}

/// Rotation factor of `B(β₁) B(β₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThomasRotation {
    pub rotation: Rotation3,
    /// Signed angle about `axis`, in `(-π, 0]`. Negative means clockwise with
    /// respect to the orientation of the ordered pair `(β₁, β₂)`.
    pub angle: f64,
    /// Unit normal `β₁ × β₂ / |β₁ × β₂|`, absent for collinear velocities.
    pub axis: Option<Vec3>,
}

/// Thomas rotation `T(β₁, β₂)`, with `B(β₁) B(β₂) = B(β₁ ⊕ β₂) R(T(β₁, β₂))`.
///
/// The rotation lies in the plane of the two velocities. Its matrix is
/// `I - p [w]ₓ + q [w]ₓ²` with `w = β₁ × β₂`,
/// `p = γ₁γ₂(1 + γ + γ₁ + γ₂)/G`, `q = γ₁²γ₂²/G` and
/// `G = (1 + γ)(1 + γ₁)(1 + γ₂)`. Every coefficient is a ratio of positive terms,
/// so the result keeps full precision for ultra-relativistic inputs.
pub fn thomas_rotation(b1: &Velocity3, b2: &Velocity3) -> ThomasRotation {
    let (g1, g2) = (b1.gamma(), b2.gamma());
    let g = gamma_compose(b1, b2);
    let w = b1.vec().cross(b2.vec());
    let big = (1.0 + g) * (1.0 + g1) * (1.0 + g2);
    let half_sum = 1.0 + g + g1 + g2;
    let p = g1 * g2 * half_sum / big;
    let q = (g1 * g2).powi(2) / big;
    let k = skew(&w);
    let m = Mat3::identity() - k * p + k * k * q;
    let wn = w.norm();
    let angle = -2.0 * (wn * g1 * g2).atan2(half_sum);
    ThomasRotation {
        rotation: Rotation3::from_matrix_unchecked(m),
        angle: if angle == 0.0 { 0.0 } else { angle },
        axis: (wn > 0.0).then(|| w / wn),
    }
}

/// Inputs accepted by [`thomas_angle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThomasAngleInput {
    /// Lorentz factors of both velocities and the angle between them. Yields `cos θ`.
    GammasAngle { gamma1: f64, gamma2: f64, phi: f64 },
    /// Lorentz factors of both velocities and of their composition. Yields `cos θ`.
    Gammas { gamma1: f64, gamma2: f64, gamma: f64 },
    /// Rapidities of the composition and of both velocities. Yields `cos(θ/2)`.
    Rapidities { rho: f64, rho1: f64, rho2: f64 },
}

/// Thomas angle from scalar data. See [`ThomasAngleInput`] for what each variant returns.
pub fn thomas_angle(input: ThomasAngleInput) -> Result<f64> {
    match input {
        ThomasAngleInput::GammasAngle { gamma1, gamma2, phi } => {
            check_gamma(gamma1)?;
            check_gamma(gamma2)?;
            if !phi.is_finite() {
                return Err(Error::NonFinite("angle"));
            }
            let root = ((gamma1 * gamma1 - 1.0) * (gamma2 * gamma2 - 1.0)).sqrt();
            let s = phi.sin();
            Ok(1.0 - (gamma1 - 1.0) * (gamma2 - 1.0) * s * s
                / (1.0 + gamma1 * gamma2 + root * phi.cos()))
        }
        ThomasAngleInput::Gammas {
            gamma1,
            gamma2,
            gamma,
        } => {
            check_reachable(gamma1, gamma2, gamma)?;
            let sum = 1.0 + gamma + gamma1 + gamma2;
            Ok(sum * sum / ((1.0 + gamma) * (1.0 + gamma1) * (1.0 + gamma2)) - 1.0)
        }
        ThomasAngleInput::Rapidities { rho, rho1, rho2 } => {
            for r in [rho, rho1, rho2] {
                if !(r >= 0.0) || !r.is_finite() {
                    return Err(Error::InvalidArgument("rapidities must be finite and non-negative"));
                }
            }
            check_reachable(rho1.cosh(), rho2.cosh(), rho.cosh())?;
            let num = 1.0 + rho.cosh() + rho1.cosh() + rho2.cosh();
            Ok(num / (4.0 * (rho / 2.0).cosh() * (rho1 / 2.0).cosh() * (rho2 / 2.0).cosh()))
        }
    }
}

/// `cos φ` for velocities with Lorentz factors `γ₁`, `γ₂` whose composition has factor `γ`.
pub fn cos_angle_between(gamma1: f64, gamma2: f64, gamma: f64) -> Result<f64> {
    check_gamma(gamma1)?;
    check_gamma(gamma2)?;
    check_gamma(gamma)?;
    let root = ((gamma1 * gamma1 - 1.0) * (gamma2 * gamma2 - 1.0)).sqrt();
    if root == 0.0 {
        return Err(Error::InvalidArgument("angle is undefined when a velocity vanishes"));
    }
    Ok((gamma - gamma1 * gamma2) / root)
}

fn check_gamma(g: f64) -> Result<()> {
    if !g.is_finite() {
        return Err(Error::NonFinite("Lorentz factor"));
    }
    if g < 1.0 {
        return Err(Error::GammaBelowOne(g));
    }
    Ok(())
}

fn check_reachable(gamma1: f64, gamma2: f64, gamma: f64) -> Result<()> {
    check_gamma(gamma1)?;
    check_gamma(gamma2)?;
    check_gamma(gamma)?;
    let root = ((gamma1 * gamma1 - 1.0) * (gamma2 * gamma2 - 1.0)).sqrt();
    let gap = gamma - gamma1 * gamma2;
    let slack = 1e-12 * gamma1 * gamma2;
    if gap.abs() > root + slack {
        let c = if root > 0.0 { gap / root } else { f64::INFINITY };
        return Err(Error::Unreachable(c));
    }
    Ok(())
}

/// The largest Thomas angle available to two velocities of fixed speeds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxThomasAngle {
    /// Lorentz factor of the composition at the maximum, `γ₁ + γ₂ - 1`.
    pub gamma: f64,
    /// Cosine of the angle between the velocities at the maximum. Always negative.
    pub cos_phi: f64,
    /// Angle between the velocities at the maximum, in `(π/2, π)`.
    pub phi: f64,
    pub cos_theta: f64,
    /// Signed maximal angle `π - 2φ`, in `(-π, 0)`.
    pub theta: f64,
    /// Whether `|θ|` exceeds a right angle.
    pub exceeds_right_angle: bool,
}

/// Extremal Thomas angle for two velocities with Lorentz factors `γ₁, γ₂ > 1`.
pub fn max_thomas_angle(gamma1: f64, gamma2: f64) -> Result<MaxThomasAngle> {
    for g in [gamma1, gamma2] {
        check_gamma(g)?;
        if g == 1.0 {
            return Err(Error::InvalidArgument("both Lorentz factors must exceed 1"));
        }
    }
    let ratio = (gamma1 - 1.0) * (gamma2 - 1.0) / ((gamma1 + 1.0) * (gamma2 + 1.0));
    let cos_phi = -ratio.sqrt();
    let phi = cos_phi.acos();
    Ok(MaxThomasAngle {
        gamma: gamma1 + gamma2 - 1.0,
        cos_phi,
        phi,
        cos_theta: 1.0 - 2.0 * ratio,
        theta: PI - 2.0 * phi,
        exceeds_right_angle: ratio > 0.5,
    })
}

/// Minimiser of a unimodal function on `[a, b]`, bracketed to width `tol`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let r = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - r * (b - a);
    let mut x2 = a + r * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > tol {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = f(x2);
        }
    }
    (a + b) / 2.0
}

/// Numerical maximum of the Thomas angle over the angle `φ` between the velocities.
///
/// Returns `(φ, cos θ)` at the minimiser of `cos θ`.
pub fn scan_max_thomas_angle(gamma1: f64, gamma2: f64, tol: f64) -> Result<(f64, f64)> {
    check_gamma(gamma1)?;
    check_gamma(gamma2)?;
    let cos_theta = |phi: f64| {
        thomas_angle(ThomasAngleInput::GammasAngle {
            gamma1,
            gamma2,
            phi,
        })
        .unwrap_or(f64::INFINITY)
    };
    let phi = golden_section_min(cos_theta, 0.0, PI, tol);
    Ok((phi, cos_theta(phi)))
}

/// Lorentz factor and speed at which the maximal Thomas angle of two equal speeds
/// reaches a right angle.
pub fn right_angle_threshold() -> (f64, f64) {
    let r2 = 2.0_f64.sqrt();
    ((r2 + 1.0) / (r2 - 1.0), 2.0_f64.powf(1.25) / (r2 + 1.0))
}
