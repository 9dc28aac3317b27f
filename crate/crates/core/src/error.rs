use thiserror::Error;

/// Errors raised by the geometry, polynomial and quadrature routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A point violates the interior (or on-sphere) constraint of its domain.
    #[error("point outside domain: {0}")]
    Domain(String),

    /// An argument is outside the range an operation accepts.
    #[error("argument out of range: {0}")]
    Range(String),

    /// A finite-difference stencil would leave the open domain.
    #[error("finite-difference stencil leaves the domain at {0}")]
    Stencil(String),

    /// Invalid parameters (dimension, Jacobi exponents, multi-index, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An iterative routine did not converge.
    #[error("no convergence: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
