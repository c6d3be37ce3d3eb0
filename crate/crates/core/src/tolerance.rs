//! Numerical thresholds shared by every module.

/// Unit-norm, orthogonality and geometry checks on four-vectors.
pub const NORM_TOL: f64 = 1e-12;

/// Entrywise checks on matrices (metric preservation, orthogonality, block relations).
pub const MATRIX_TOL: f64 = 1e-10;

/// Largest accepted speed. Anything at or beyond this is treated as lightlike.
pub const MAX_SPEED: f64 = 1.0 - 1e-12;

/// Asymmetry above which the symmetric square root refuses its input.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Off-diagonal threshold that ends the Jacobi sweeps.
pub const JACOBI_THRESHOLD: f64 = 1e-14;

/// Upper bound on Jacobi sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 50;

/// Below this value of `gamma - 1` two states are treated as equal.
pub const SAME_STATE_TOL: f64 = 1e-14;

/// Below this value of `gamma12 - 1` the link problem short-circuits to the identity.
pub const LINK_DEGENERATE_TOL: f64 = 1e-13;

/// Below this value of `gamma12 - 1` the plane spanned by two states is refused.
pub const PLANE_DEGENERATE_TOL: f64 = 1e-12;

/// Series for the exponential map stops once a term is this small in the max norm.
pub const SERIES_TERM_TOL: f64 = 1e-16;

/// Hard cap on series terms.
pub const SERIES_MAX_TERMS: usize = 60;

/// Residual below which a loop axiom counts as satisfied.
pub const AXIOM_TOL: f64 = 1e-10;

/// Largest Lorentz factor compatible with [`MAX_SPEED`].
pub fn gamma_limit() -> f64 {
    1.0 / ((1.0 - MAX_SPEED) * (1.0 + MAX_SPEED)).sqrt()
}
