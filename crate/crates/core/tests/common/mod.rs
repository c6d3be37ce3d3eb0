//! Independent reference routes used by the integration tests.
//!
//! Nothing here calls the function it is checking: velocities come from raw 4x4
//! products, the link boost from a numerical search, roots from bisection.
#![allow(dead_code)]

use nalgebra::{Matrix3, Matrix4, Vector3, Vector4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relkin::{FourVector, StateOfMotion, Velocity3};

pub type V3 = Vector3<f64>;
pub type M4 = Matrix4<f64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard boost written as `I + (γ-1) n nᵀ` on the spatial block.
pub fn raw_boost(b: &V3) -> M4 {
    let b2 = b.norm_squared();
    let g = 1.0 / (1.0 - b2).sqrt();
    let mut m = M4::identity();
    m[(0, 0)] = g;
    for i in 0..3 {
        m[(0, i + 1)] = g * b[i];
        m[(i + 1, 0)] = g * b[i];
        for j in 0..3 {
            if b2 > 0.0 {
                m[(i + 1, j + 1)] += (g - 1.0) * b[i] * b[j] / b2;
            }
        }
    }
    m
}

/// Velocity of `B(b1) B(b2) e0`.
pub fn matrix_add(b1: &V3, b2: &V3) -> V3 {
    let s = raw_boost(b1) * raw_boost(b2) * Vector4::new(1.0, 0.0, 0.0, 0.0);
    V3::new(s[1], s[2], s[3]) / s[0]
}

/// Addition in the form `(β₁ + β₂∥ + β₂⊥/γ₁) / (1 + β₁·β₂)`.
pub fn projection_form_add(b1: &V3, b2: &V3) -> V3 {
    let g1 = 1.0 / (1.0 - b1.norm_squared()).sqrt();
    let n = b1 / b1.norm();
    let par = n * n.dot(b2);
    (b1 + par + (b2 - par) / g1) / (1.0 + b1.dot(b2))
}

pub fn gamma_of(b: &V3) -> f64 {
    1.0 / (1.0 - b.norm_squared()).sqrt()
}

pub fn speed_for_gamma(g: f64) -> f64 {
    ((g - 1.0) * (g + 1.0)).sqrt() / g
}

pub fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.random_range(lo.ln()..hi.ln())).exp()
}

pub fn unit_vector<R: Rng>(rng: &mut R) -> V3 {
    loop {
        let v = V3::from_fn(|_, _| rng.random_range(-1.0..1.0));
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

pub fn velocity<R: Rng>(rng: &mut R, gamma_max: f64) -> Velocity3 {
    let g = log_uniform(rng, 1.0, gamma_max);
    Velocity3::from_vec(unit_vector(rng) * speed_for_gamma(g)).unwrap()
}

pub fn state<R: Rng>(rng: &mut R, gamma_max: f64) -> StateOfMotion {
    StateOfMotion::from_velocity(&velocity(rng, gamma_max))
}

/// Minkowski inner product written out by hand.
pub fn mdot(u: &Vector4<f64>, v: &Vector4<f64>) -> f64 {
    -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]
}

/// A vector tangent at `s` with Euclidean-sized components.
pub fn tangent_at<R: Rng>(rng: &mut R, s: &StateOfMotion) -> FourVector {
    let raw = Vector4::from_fn(|_, _| rng.random_range(-1.0..1.0));
    let sv = *s.vector().vec();
    let proj = raw + sv * mdot(&raw, &sv);
    FourVector::try_from_vec(proj).unwrap()
}

/// Root of `f` on `[a, b]` by bisection; `f(a)` and `f(b)` must differ in sign.
pub fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let fa = f(a);
    assert!(fa * f(b) <= 0.0, "root is not bracketed");
    while b - a > tol {
        let m = 0.5 * (a + b);
        if (f(m) > 0.0) == (fa > 0.0) {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Brute-force link problem: search over rapidity-vectors `w` in the rest frame of `s`
/// for a boost taking `s1` to `s2`, using damped Gauss-Newton with finite differences.
///
/// Returns the link velocity as a four-vector tangent at `s`, or `None` if the search stalls.
pub fn descent_link(
    s: &StateOfMotion,
    s1: &StateOfMotion,
    s2: &StateOfMotion,
    start: V3,
) -> Option<Vector4<f64>> {
    let bs = frame_of(s);
    let bs_inv = minkowski_inverse(&bs);
    let s1p = bs_inv * s1.vector().vec();
    let s2p = bs_inv * s2.vector().vec();
    let velocity_of = |w: &V3| {
        let r = w.norm();
        if r == 0.0 {
            V3::zeros()
        } else {
            w * (r.tanh() / r)
        }
    };
    let residual = |w: &V3| -> Vector4<f64> { raw_boost(&velocity_of(w)) * s1p - s2p };
    let scale = s2p.amax().max(1.0);
    let mut w = start;
    let mut lambda = 1e-3;
    let mut r = residual(&w);
    let mut cost = r.norm_squared();
    for _ in 0..500 {
        let mut jac = nalgebra::Matrix4x3::<f64>::zeros();
        for k in 0..3 {
            let h = 1e-7 * (1.0 + w[k].abs());
            let mut wp = w;
            wp[k] += h;
            let mut wm = w;
            wm[k] -= h;
            jac.set_column(k, &((residual(&wp) - residual(&wm)) / (2.0 * h)));
        }
        let jtj = jac.transpose() * jac;
        let g = jac.transpose() * r;
        let mut accepted = false;
        for _ in 0..30 {
            let a = jtj + Matrix3::from_diagonal(&jtj.diagonal()) * lambda;
            let step = match a.lu().solve(&-g) {
                Some(step) => step,
                None => {
                    lambda *= 10.0;
                    continue;
                }
            };
            let wn = w + step;
            let rn = residual(&wn);
            let cn = rn.norm_squared();
            if cn < cost {
                w = wn;
                r = rn;
                cost = cn;
                lambda = (lambda / 10.0).max(1e-12);
                accepted = true;
                if step.norm() < 1e-13 * (1.0 + w.norm()) {
                    return finish(&bs, &velocity_of(&w));
                }
                break;
            }
            lambda *= 10.0;
        }
        if !accepted || cost.sqrt() < 1e-15 * scale {
            break;
        }
    }
    if cost.sqrt() < 1e-9 * scale {
        finish(&bs, &velocity_of(&w))
    } else {
        None
    }
}

fn finish(bs: &M4, b: &V3) -> Option<Vector4<f64>> {
    Some(bs * Vector4::new(0.0, b.x, b.y, b.z))
}

/// A Lorentz matrix whose columns are an orthonormal frame with `s` as time axis.
pub fn frame_of(s: &StateOfMotion) -> M4 {
    let v = s.vector();
    raw_boost(&(v.space() / v.time()))
}

pub fn minkowski_inverse(l: &M4) -> M4 {
    let e = M4::from_diagonal(&Vector4::new(-1.0, 1.0, 1.0, 1.0));
    e * l.transpose() * e
}

pub fn max_abs4(m: &M4) -> f64 {
    m.iter().fold(0.0_f64, |a, x| a.max(x.abs()))
}

pub fn max_abs3(m: &Matrix3<f64>) -> f64 {
    m.iter().fold(0.0_f64, |a, x| a.max(x.abs()))
}

/// Velocity with direction `raw` (normalised, `x̂` if nearly zero) and `ln γ = log_gamma`.
pub fn velocity_from(raw: [f64; 3], log_gamma: f64) -> Velocity3 {
    let v = V3::from(raw);
    let dir = if v.norm() < 1e-3 { V3::x() } else { v / v.norm() };
    Velocity3::from_vec(dir * speed_for_gamma(log_gamma.exp())).unwrap()
}

pub fn state_from(raw: [f64; 3], log_gamma: f64) -> StateOfMotion {
    StateOfMotion::from_velocity(&velocity_from(raw, log_gamma))
}
