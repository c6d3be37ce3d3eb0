//! Fixed-size matrix plumbing and a cyclic Jacobi eigensolver for symmetric 4x4 matrices.

use nalgebra::{Matrix3, Matrix4, Vector3, Vector4};

use crate::error::{Error, Result};
use crate::tolerance::{JACOBI_MAX_SWEEPS, JACOBI_THRESHOLD, SYMMETRY_TOL};

pub type Vec3 = Vector3<f64>;
pub type Mat3 = Matrix3<f64>;
pub type Vec4 = Vector4<f64>;
pub type Mat4 = Matrix4<f64>;

/// The Minkowski metric `diag(-1, 1, 1, 1)`.
pub fn eta() -> Mat4 {
    Mat4::from_diagonal(&Vec4::new(-1.0, 1.0, 1.0, 1.0))
}

/// Largest absolute entry.
pub fn max_abs<R: nalgebra::Dim, C: nalgebra::Dim, S: nalgebra::RawStorage<f64, R, C>>(
    m: &nalgebra::Matrix<f64, R, C, S>,
) -> f64 {
    m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
}

/// Cross-product matrix: `skew(w) * v == w.cross(&v)`.
pub fn skew(w: &Vec3) -> Mat3 {
    Mat3::new(0.0, -w.z, w.y, w.z, 0.0, -w.x, -w.y, w.x, 0.0)
}

/// Block layout `[[c, a^T], [b, m]]` of a 4x4 matrix.
pub fn split_blocks(l: &Mat4) -> (f64, Vec3, Vec3, Mat3) {
    let c = l[(0, 0)];
    let a = Vec3::new(l[(0, 1)], l[(0, 2)], l[(0, 3)]);
    let b = Vec3::new(l[(1, 0)], l[(2, 0)], l[(3, 0)]);
    let m = l.fixed_view::<3, 3>(1, 1).into_owned();
    (c, a, b, m)
}

/// Inverse of [`split_blocks`].
pub fn join_blocks(c: f64, a: &Vec3, b: &Vec3, m: &Mat3) -> Mat4 {
    let mut l = Mat4::zeros();
    l[(0, 0)] = c;
    for i in 0..3 {
        l[(0, i + 1)] = a[i];
        l[(i + 1, 0)] = b[i];
        for j in 0..3 {
            l[(i + 1, j + 1)] = m[(i, j)];
        }
    }
    l
}

/// Eigen-decomposition `a = V diag(values) V^T` of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    pub values: Vec4,
    pub vectors: Mat4,
}

impl SymmetricEigen {
    /// Rebuild `V diag(f(values)) V^T`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Mat4 {
        let d = Mat4::from_diagonal(&self.values.map(f));
        self.vectors * d * self.vectors.transpose()
    }
}

/// Cyclic Jacobi rotations until the off-diagonal mass falls below the threshold.
pub fn jacobi_eigen(a: &Mat4) -> Result<SymmetricEigen> {
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("matrix"));
    }
    let scale = max_abs(a).max(1.0);
    let asym = max_abs(&(a - a.transpose())) / scale;
    if asym > SYMMETRY_TOL {
        return Err(Error::NotSymmetric(asym));
    }
    let mut m = (a + a.transpose()) * 0.5;
    let mut v = Mat4::identity();
    let off = |m: &Mat4| {
        let mut s = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    s += m[(i, j)] * m[(i, j)];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off(&m) <= JACOBI_THRESHOLD * scale {
            return Ok(SymmetricEigen {
                values: m.diagonal(),
                vectors: v,
            });
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let mut r = Mat4::identity();
                r[(p, p)] = c;
                r[(q, q)] = c;
                r[(p, q)] = s;
                r[(q, p)] = -s;
                m = r.transpose() * m * r;
                m[(p, q)] = 0.0;
                m[(q, p)] = 0.0;
                v *= r;
            }
        }
    }
    let rest = off(&m);
    if rest <= JACOBI_THRESHOLD * scale {
        Ok(SymmetricEigen {
            values: m.diagonal(),
            vectors: v,
        })
    } else {
        Err(Error::NoConvergence(rest))
    }
}

/// Unique symmetric positive-definite square root of a symmetric positive-definite matrix.
pub fn symmetric_sqrt(a: &Mat4) -> Result<Mat4> {
    let eig = positive_eigen(a)?;
    Ok(eig.map(f64::sqrt))
}

/// Inverse of [`symmetric_sqrt`], computed from the same decomposition.
pub fn symmetric_inv_sqrt(a: &Mat4) -> Result<Mat4> {
    let eig = positive_eigen(a)?;
    Ok(eig.map(|x| 1.0 / x.sqrt()))
}

fn positive_eigen(a: &Mat4) -> Result<SymmetricEigen> {
    let eig = jacobi_eigen(a)?;
    let min = eig.values.min();
    if min <= 0.0 {
        return Err(Error::NotPositiveDefinite(min));
    }
    Ok(eig)
}
