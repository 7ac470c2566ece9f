//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("degree constraint violated: {0}")]
    InvalidDegree(String),
    #[error("Möbius map is degenerate (ad - bc = 0)")]
    SingularMap,
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
    #[error("no finite gauge exponent solves the inversion constraint")]
    NoExponent,
    #[error("series denominator vanishes: kappa(0) + (j+1)sigma'(0) = 0 at j = {0}")]
    PoleInParameters(u32),
    #[error("series is asymptotic only (sigma'(0) = 0 and non-terminating); use the integral representation")]
    AsymptoticOnly,
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("argument outside the evaluation domain: {0}")]
    DomainError(String),
    #[error("argument lies on the branch cut [0, ∞)")]
    BranchCut,
    #[error("contour boundary term does not vanish: |boundary| = {0:.3e}")]
    BoundaryTermNonzero(f64),
    #[error("family has no orthogonality interval")]
    NoOrthogonalityInterval,
    #[error("operator is not reducible to a tabulated normal form by an affine map and a constant divisor")]
    NotReducible,
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
