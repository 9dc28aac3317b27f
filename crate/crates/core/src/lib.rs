//! Spectral geometry of the Baran metric.
//!
//! The ball, the simplex and the sphere carry a Riemannian metric coming from
//! pluripotential theory (the Baran metric). Its volume form is the
//! pluripotential equilibrium measure, and the Laplace–Beltrami operator of
//! the metric is diagonalised by the orthogonal polynomials of that measure.
//! This crate evaluates all the pieces needed to check that numerically:
//!
//! * [`geometry`]: metric tensors, equilibrium densities, curvature, geodesic
//!   distances and boundary collar volumes;
//! * [`orthopoly1d`]: Chebyshev and monic Jacobi polynomials;
//! * [`bases`]: orthogonal bases on the ball, simplex and sphere;
//! * [`polyn`]: sparse multivariate polynomials;
//! * [`operators`]: exact and finite-difference Laplace–Beltrami operators;
//! * [`quadrature`]: Gauss–Jacobi rules and equilibrium-measure cubature;
//! * [`sampling`]: seeded random points and directions;
//! * [`spectral`]: Fourier projections, Sobolev sums, Baran inequality;
//! * [`sphere`]: the extremal function of the real sphere in its
//!   complexification;
//! * [`cli`]: the `baran-spectral` command line driver.

pub mod bases;
pub mod cli;
mod error;
pub mod geometry;
pub mod operators;
pub mod orthopoly1d;
pub mod polyn;
pub mod quadrature;
pub mod sampling;
pub mod spectral;
pub mod sphere;

pub use error::{Error, Result};
pub use geometry::{ChartPoint, DomainKind, DomainSpec, MetricEval};
pub use polyn::PolyN;
