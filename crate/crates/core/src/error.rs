use thiserror::Error;

/// Errors raised when an input leaves the domain of an operation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite component in {0}")]
    NonFinite(&'static str),

    #[error("speed {speed} is not below the limit {limit}")]
    NearLightlike { speed: f64, limit: f64 },

    #[error("vector is not future-pointing timelike (squared norm {norm_sq}, time component {time})")]
    NotFutureTimelike { norm_sq: f64, time: f64 },

    #[error("matrix is not a rotation (orthogonality residual {orthogonality}, determinant {det})")]
    NotRotation { orthogonality: f64, det: f64 },

    #[error("matrix is not a proper orthochronous Lorentz matrix (metric residual {metric}, time entry {time})")]
    NotLorentz { metric: f64, time: f64 },

    #[error("matrix is not symmetric (asymmetry {0})")]
    NotSymmetric(f64),

    #[error("matrix is not positive definite (smallest eigenvalue {0})")]
    NotPositiveDefinite(f64),

    #[error("eigen-iteration did not converge (off-diagonal mass {0})")]
    NoConvergence(f64),

    #[error("Lorentz factor {0} is below 1")]
    GammaBelowOne(f64),

    #[error("no velocity pair realises the requested Lorentz factors (cosine {0})")]
    Unreachable(f64),

    #[error("states coincide, so the plane they span is degenerate (gamma - 1 = {0})")]
    DegeneratePlane(f64),

    #[error("vector is not a unit tangent at the state (norm residual {norm}, orthogonality residual {orth})")]
    NotUnitTangent { norm: f64, orth: f64 },

    #[error("vector is not tangent at the state (residual {0})")]
    NotTangent(f64),

    #[error("matrix is not a Galilei transformation ({0})")]
    NotGalilei(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
