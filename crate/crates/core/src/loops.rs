//! Algebraic checks on `⊕`: the loop axioms and the two Benz conditions.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{max_abs, Vec3};
use crate::lorentz::Velocity3;
use crate::sample::VelocitySampler;
use crate::tolerance::AXIOM_TOL;
use crate::velocity::{einstein_add, gamma_compose, solve_left, thomas_rotation, velocity_difference};

/// Each identity probed by [`check_loop_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Closure,
    Identity,
    Inverse,
    LeftDivision,
    RightDivision,
    Commutativity,
    Associativity,
    /// `β₁ ⊕ β₂ = T(β₁, β₂)(β₂ ⊕ β₁)`.
    RotatedCommutativity,
    /// `T(β₂, β₁) = T(β₁, β₂)⁻¹`.
    ThomasInverse,
    /// `(-β₁) ⊕ (-β₂) = -(β₁ ⊕ β₂)` and `T(-β₁, -β₂) = T(β₁, β₂)`.
    Parity,
    /// `Dβ₁ ⊕ Dβ₂ = D(β₁ ⊕ β₂)` and `T(Dβ₁, Dβ₂) = D T(β₁, β₂) D⁻¹`.
    RotationEquivariance,
    /// `-(β₁ ⊕ β₂) = T(β₁, β₂)((-β₂) ⊕ (-β₁))`.
    Mocanu,
    /// `β₁ ⊕ (β₂ ⊕ β₃) = (β₁ ⊕ β₂) ⊕ T(β₁, β₂)β₃`.
    LeftWeakAssociativity,
    /// `(β₁ ⊕ β₂) ⊕ β₃ = β₁ ⊕ (β₂ ⊕ T(β₂, β₁)β₃)`.
    RightWeakAssociativity,
    /// `T(β₁, β₂) = T(β₁, β₂ ⊕ β₁) = T(β₁ ⊕ β₂, β₂)`.
    LoopProperty,
}

impl Axiom {
    pub const ALL: [Axiom; 15] = [
        Axiom::Closure,
        Axiom::Identity,
        Axiom::Inverse,
        Axiom::LeftDivision,
        Axiom::RightDivision,
        Axiom::Commutativity,
        Axiom::Associativity,
        Axiom::RotatedCommutativity,
        Axiom::ThomasInverse,
        Axiom::Parity,
        Axiom::RotationEquivariance,
        Axiom::Mocanu,
        Axiom::LeftWeakAssociativity,
        Axiom::RightWeakAssociativity,
        Axiom::LoopProperty,
    ];

    /// Whether the axiom holds for `⊕` on arbitrary velocities.
    pub fn holds_in_loop(self) -> bool {
        !matches!(self, Axiom::Commutativity | Axiom::Associativity)
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::LeftDivision => "left_division",
            Axiom::RightDivision => "right_division",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::RotatedCommutativity => "rotated_commutativity",
            Axiom::ThomasInverse => "thomas_inverse",
            Axiom::Parity => "parity",
            Axiom::RotationEquivariance => "rotation_equivariance",
            Axiom::Mocanu => "mocanu",
            Axiom::LeftWeakAssociativity => "left_weak_associativity",
            Axiom::RightWeakAssociativity => "right_weak_associativity",
            Axiom::LoopProperty => "loop_property",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Worst case seen for one axiom.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub worst_residual: f64,
    /// The velocities that produced `worst_residual`.
    pub witness: Vec<Velocity3>,
    pub holds: bool,
}

/// Outcome of every axiom over the same samples.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub samples: usize,
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn get(&self, axiom: Axiom) -> &AxiomOutcome {
        self.outcomes
            .iter()
            .find(|o| o.axiom == axiom)
            .expect("every axiom is reported")
    }

    /// Everything holds except commutativity and associativity, which fail with a witness.
    pub fn matches_loop_signature(&self) -> bool {
        self.outcomes
            .iter()
            .all(|o| o.holds == o.axiom.holds_in_loop())
    }

    /// Every axiom holds.
    pub fn matches_group_signature(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }
}

struct Tracker {
    worst: f64,
    witness: Vec<Velocity3>,
}

/// Probe every [`Axiom`] on `n` triples drawn from `sampler`.
pub fn check_loop_axioms<R: Rng>(sampler: &mut VelocitySampler<R>, n: usize) -> Result<AxiomReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample count must be positive"));
    }
    let mut trackers: Vec<Tracker> = Axiom::ALL
        .iter()
        .map(|_| Tracker {
            worst: 0.0,
            witness: Vec::new(),
        })
        .collect();
    for _ in 0..n {
        let (b1, b2, b3) = sampler.triple();
        let d = sampler.rotation();
        for (i, axiom) in Axiom::ALL.iter().enumerate() {
            let r = residual(*axiom, &b1, &b2, &b3, &d)?;
            let t = &mut trackers[i];
            if r > t.worst || t.witness.is_empty() {
                t.worst = r;
                t.witness = vec![b1, b2, b3];
            }
        }
    }
    let outcomes = Axiom::ALL
        .iter()
        .zip(trackers)
        .map(|(axiom, t)| AxiomOutcome {
            axiom: *axiom,
            worst_residual: t.worst,
            witness: t.witness,
            holds: t.worst <= AXIOM_TOL,
        })
        .collect();
    Ok(AxiomReport {
        samples: n,
        outcomes,
    })
}

fn residual(
    axiom: Axiom,
    b1: &Velocity3,
    b2: &Velocity3,
    b3: &Velocity3,
    d: &crate::lorentz::Rotation3,
) -> Result<f64> {
    let add = einstein_add;
    let dist = |a: &Velocity3, b: &Velocity3| (a.vec() - b.vec()).norm();
    let zero = Velocity3::zero();
    Ok(match axiom {
        Axiom::Closure => {
            let s = add(b1, b2)?;
            if s.norm() < 1.0 {
                0.0
            } else {
                s.norm()
            }
        }
        Axiom::Identity => dist(&add(&zero, b1)?, b1).max(dist(&add(b1, &zero)?, b1)),
        Axiom::Inverse => add(b1, &-*b1)?.norm().max(add(&-*b1, b1)?.norm()),
        Axiom::LeftDivision => {
            let x = solve_left(b3, b2)?;
            dist(&add(&x, b2)?, b3)
        }
        Axiom::RightDivision => {
            let x = velocity_difference(b3, b1)?;
            dist(&add(b1, &x)?, b3)
        }
        Axiom::Commutativity => dist(&add(b1, b2)?, &add(b2, b1)?),
        Axiom::Associativity => dist(&add(b1, &add(b2, b3)?)?, &add(&add(b1, b2)?, b3)?),
        Axiom::RotatedCommutativity => {
            let t = thomas_rotation(b1, b2).rotation;
            dist(&add(b1, b2)?, &add(b2, b1)?.rotated(&t))
        }
        Axiom::ThomasInverse => {
            let t12 = thomas_rotation(b1, b2).rotation;
            let t21 = thomas_rotation(b2, b1).rotation;
            max_abs(&(t21.matrix() - t12.inverse().matrix()))
        }
        Axiom::Parity => {
            let lhs = add(&-*b1, &-*b2)?;
            let rhs = -add(b1, b2)?;
            let t = thomas_rotation(b1, b2).rotation;
            let tn = thomas_rotation(&-*b1, &-*b2).rotation;
            dist(&lhs, &rhs).max(max_abs(&(t.matrix() - tn.matrix())))
        }
        Axiom::RotationEquivariance => {
            let (r1, r2) = (b1.rotated(d), b2.rotated(d));
            let v = dist(&add(&r1, &r2)?, &add(b1, b2)?.rotated(d));
            let t = thomas_rotation(b1, b2).rotation;
            let tr = thomas_rotation(&r1, &r2).rotation;
            let conj = *d * t * d.inverse();
            v.max(max_abs(&(tr.matrix() - conj.matrix())))
        }
        Axiom::Mocanu => {
            let t = thomas_rotation(b1, b2).rotation;
            let rhs = add(&-*b2, &-*b1)?.rotated(&t);
            dist(&-add(b1, b2)?, &rhs)
        }
        Axiom::LeftWeakAssociativity => {
            let t = thomas_rotation(b1, b2).rotation;
            dist(
                &add(b1, &add(b2, b3)?)?,
                &add(&add(b1, b2)?, &b3.rotated(&t))?,
            )
        }
        Axiom::RightWeakAssociativity => {
            let t = thomas_rotation(b2, b1).rotation;
            dist(
                &add(&add(b1, b2)?, b3)?,
                &add(b1, &add(b2, &b3.rotated(&t))?)?,
            )
        }
        Axiom::LoopProperty => {
            let t = thomas_rotation(b1, b2).rotation;
            let ta = thomas_rotation(b1, &add(b2, b1)?).rotation;
            let tb = thomas_rotation(&add(b1, b2)?, b2).rotation;
            max_abs(&(t.matrix() - ta.matrix())).max(max_abs(&(t.matrix() - tb.matrix())))
        }
    })
}

/// Residuals of the two Benz conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenzReport {
    /// Distance of `f(β₁, (1-λ)β₂ + λβ₂')` from the line through `f(β₁, β₂)` and `f(β₁, β₂')`.
    pub affine_residual: f64,
    /// Sine of the angle between `γ(f) f - γ₂ β₂` and `β₁`.
    pub collinearity_residual: f64,
    /// Component of `γ(f) f - γ₂ β₂` along `β₁`. Positive when the condition holds.
    pub along: f64,
}

/// Benz conditions for an arbitrary composition law.
///
/// `compose` returns the composite velocity together with the weight that
/// multiplies it in the second condition.
pub fn benz_conditions_with(
    compose: impl Fn(&Vec3, &Vec3) -> (Vec3, f64),
    weight2: impl Fn(&Vec3) -> f64,
    b1: &Vec3,
    b2: &Vec3,
    b2_other: &Vec3,
    lambda: f64,
) -> BenzReport {
    let (p0, _) = compose(b1, b2);
    let (p1, _) = compose(b1, b2_other);
    let (pl, _) = compose(b1, &(b2 * (1.0 - lambda) + b2_other * lambda));
    let dir = p1 - p0;
    let affine_residual = if dir.norm() == 0.0 {
        (pl - p0).norm()
    } else {
        (pl - p0).cross(&dir).norm() / dir.norm()
    };
    let (f, g) = compose(b1, b2);
    let v = f * g - b2 * weight2(b2);
    let scale = v.norm() * b1.norm();
    let (collinearity_residual, along) = if scale == 0.0 {
        (0.0, 0.0)
    } else {
        (v.cross(b1).norm() / scale, v.dot(b1) / b1.norm())
    };
    BenzReport {
        affine_residual,
        collinearity_residual,
        along,
    }
}

/// Benz conditions for `⊕`, with `γ(β₁ ⊕ β₂)` as the weight.
pub fn check_benz_conditions(
    b1: &Velocity3,
    b2: &Velocity3,
    b2_other: &Velocity3,
    lambda: f64,
) -> Result<BenzReport> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidArgument("lambda must lie in [0, 1]"));
    }
    einstein_add(b1, b2)?;
    einstein_add(b1, b2_other)?;
    let compose = move |u: &Vec3, w: &Vec3| {
        let (u, w) = (
            Velocity3::from_vec(*u).expect("inputs were validated"),
            Velocity3::from_vec(*w).expect("convex combination stays in the ball"),
        );
        let s = einstein_add(&u, &w).expect("composition stays in the ball");
        (*s.vec(), gamma_compose(&u, &w))
    };
    let weight2 = |w: &Vec3| Velocity3::from_vec(*w).map(|v| v.gamma()).unwrap_or(f64::NAN);
    Ok(benz_conditions_with(
        compose,
        weight2,
        b1.vec(),
        b2.vec(),
        b2_other.vec(),
        lambda,
    ))
}
