//! Baran metrics of the ball, the simplex and the sphere.
//!
//! * Ball `B^n = {|x| < 1}`: `G(x) = I + x xᵀ / (1 - |x|²)`,
//!   `G⁻¹(x) = I - x xᵀ`, `√det G = (1 - |x|²)^{-1/2}`.
//! * Simplex `S^n = {x_i > 0, Σ x_i < 1}`: `G(x) = diag(1/x) + 1 1ᵀ/(1 - Σx)`,
//!   `G⁻¹(x) = diag(x) - x xᵀ`, `√det G = ((1 - Σx) Π x_i)^{-1/2}`.
//! * Sphere `𝕊^{n-1} ⊂ ℝⁿ`: the round metric. Points are ambient unit
//!   vectors; coordinates are taken in the projection chart that drops the
//!   ambient coordinate of largest modulus, where the round metric is the ball
//!   metric of dimension `n - 1`.
//!
//! In all three cases the Riemannian volume form of the metric is the
//! equilibrium measure (up to the constant `c_{n-1}` on the sphere).

mod collar;
mod curvature;
mod geodesic;

pub use collar::{collar_volume, incomplete_beta, sphere_surface_area};
pub use curvature::{
    christoffel, christoffel_in_chart, einstein_constant, einstein_residual,
    einstein_residual_with_constant, ricci, ricci_in_chart, Christoffel,
};
pub use geodesic::{geodesic_distance, shoot_geodesic, GeodesicShot};

use crate::{Error, Result};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Tolerance on `|ξ| = 1` for sphere points.
pub const SPHERE_TOL: f64 = 1e-12;

/// Tolerance on `⟨x, v⟩ = 0` for sphere tangent vectors.
pub const TANGENT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainKind {
    Ball,
    Simplex,
    Sphere,
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DomainKind::Ball => "ball",
            DomainKind::Simplex => "simplex",
            DomainKind::Sphere => "sphere",
        })
    }
}

impl std::str::FromStr for DomainKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ball" => Ok(DomainKind::Ball),
            "simplex" => Ok(DomainKind::Simplex),
            "sphere" => Ok(DomainKind::Sphere),
            other => Err(Error::Parameter(format!("unknown domain '{other}'"))),
        }
    }
}

/// A Baran body and its real dimension. For the sphere, `n` is the dimension
/// of the ambient space, so the manifold is `𝕊^{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DomainSpec {
    kind: DomainKind,
    n: usize,
}

impl DomainSpec {
    pub fn new(kind: DomainKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("dimension must be at least 1".into()));
        }
        if kind == DomainKind::Sphere && n < 2 {
            return Err(Error::Parameter(
                "the sphere needs an ambient dimension of at least 2".into(),
            ));
        }
        Ok(DomainSpec { kind, n })
    }

    pub fn ball(n: usize) -> Result<Self> {
        Self::new(DomainKind::Ball, n)
    }

    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(DomainKind::Simplex, n)
    }

    pub fn sphere(n: usize) -> Result<Self> {
        Self::new(DomainKind::Sphere, n)
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the manifold (number of chart coordinates).
    pub fn manifold_dim(&self) -> usize {
        match self.kind {
            DomainKind::Sphere => self.n - 1,
            _ => self.n,
        }
    }

    /// Checks the interior constraint and names the violated one.
    pub fn check_point(&self, coords: &[f64]) -> Result<()> {
        if coords.len() != self.n {
            return Err(Error::Domain(format!(
                "expected {} coordinates for {self}, got {}",
                self.n,
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("non-finite coordinate".into()));
        }
        match self.kind {
            DomainKind::Ball => {
                let r2 = norm_sq(coords);
                if r2 >= 1.0 {
                    return Err(Error::Domain(format!("|x|² = {r2} is not < 1")));
                }
            }
            DomainKind::Simplex => {
                if let Some((i, v)) = coords.iter().enumerate().find(|(_, v)| **v <= 0.0) {
                    return Err(Error::Domain(format!("x_{} = {v} is not > 0", i + 1)));
                }
                let s: f64 = coords.iter().sum();
                if s >= 1.0 {
                    return Err(Error::Domain(format!("Σ x_i = {s} is not < 1")));
                }
            }
            DomainKind::Sphere => {
                let r = norm_sq(coords).sqrt();
                if (r - 1.0).abs() > SPHERE_TOL {
                    return Err(Error::Domain(format!("|ξ| = {r} is not 1")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.kind, self.n)
    }
}

/// A validated point of a domain (ambient coordinates for the sphere).
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint {
    domain: DomainSpec,
    coords: Vec<f64>,
}

impl ChartPoint {
    pub fn new(domain: DomainSpec, coords: Vec<f64>) -> Result<Self> {
        domain.check_point(&coords)?;
        Ok(ChartPoint { domain, coords })
    }

    pub fn domain(&self) -> DomainSpec {
        self.domain
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }
}

/// Metric matrix, its inverse and `√det g` at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricEval {
    pub g: DMatrix<f64>,
    pub g_inv: DMatrix<f64>,
    pub sqrt_det: f64,
}

/// Ball metric at `x`, closed forms for `G`, `G⁻¹` and `√det G`.
pub fn ball_metric(x: &[f64]) -> Result<MetricEval> {
    let n = x.len();
    let r2 = norm_sq(x);
    let gap = 1.0 - r2;
    if !(gap > 0.0) {
        return Err(Error::Domain(format!("|x|² = {r2} is not < 1")));
    }
    let g = DMatrix::from_fn(n, n, |i, j| delta(i, j) + x[i] * x[j] / gap);
    let g_inv = DMatrix::from_fn(n, n, |i, j| delta(i, j) - x[i] * x[j]);
    Ok(MetricEval {
        g,
        g_inv,
        sqrt_det: gap.powf(-0.5),
    })
}

/// Simplex metric at `x`.
pub fn simplex_metric(x: &[f64]) -> Result<MetricEval> {
    let n = x.len();
    if let Some((i, v)) = x.iter().enumerate().find(|(_, v)| !(**v > 0.0)) {
        return Err(Error::Domain(format!("x_{} = {v} is not > 0", i + 1)));
    }
    let gap = 1.0 - x.iter().sum::<f64>();
    if !(gap > 0.0) {
        return Err(Error::Domain(format!("Σ x_i = {} is not < 1", 1.0 - gap)));
    }
    let g = DMatrix::from_fn(n, n, |i, j| delta(i, j) / x[i] + 1.0 / gap);
    let g_inv = DMatrix::from_fn(n, n, |i, j| delta(i, j) * x[i] - x[i] * x[j]);
    let h = gap * x.iter().product::<f64>();
    Ok(MetricEval {
        g,
        g_inv,
        sqrt_det: h.powf(-0.5),
    })
}

/// Coordinate chart of a domain.
///
/// Ball and simplex use their own coordinates. The sphere uses the
/// projection onto the hyperplane `ξ_p = 0`, restricted to the open
/// hemisphere `sign · ξ_p > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Chart {
    Ball(usize),
    Simplex(usize),
    SphereProjection { n: usize, dropped: usize, sign: f64 },
}

impl Chart {
    /// The chart used at `point` (for the sphere: drop the largest coordinate).
    pub fn at(point: &ChartPoint) -> Chart {
        let d = point.domain();
        match d.kind() {
            DomainKind::Ball => Chart::Ball(d.n()),
            DomainKind::Simplex => Chart::Simplex(d.n()),
            DomainKind::Sphere => {
                let (dropped, v) = point
                    .coords()
                    .iter()
                    .enumerate()
                    .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
                    .expect("n >= 2");
                Chart::SphereProjection {
                    n: d.n(),
                    dropped,
                    sign: v.signum(),
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            Chart::Ball(n) | Chart::Simplex(n) => n,
            Chart::SphereProjection { n, .. } => n - 1,
        }
    }

    /// Chart coordinates of an ambient point (which must lie in the chart).
    pub fn coords_of(&self, ambient: &[f64]) -> Vec<f64> {
        match *self {
            Chart::Ball(_) | Chart::Simplex(_) => ambient.to_vec(),
            Chart::SphereProjection { dropped, .. } => ambient
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != dropped)
                .map(|(_, v)| *v)
                .collect(),
        }
    }

    /// Whether `u` lies in the open chart domain.
    pub fn contains(&self, u: &[f64]) -> bool {
        if u.len() != self.dim() || u.iter().any(|c| !c.is_finite()) {
            return false;
        }
        match *self {
            Chart::Ball(_) | Chart::SphereProjection { .. } => norm_sq(u) < 1.0,
            Chart::Simplex(_) => u.iter().all(|&c| c > 0.0) && u.iter().sum::<f64>() < 1.0,
        }
    }

    /// Ambient point of chart coordinates `u`.
    pub fn lift(&self, u: &[f64]) -> Vec<f64> {
        match *self {
            Chart::Ball(_) | Chart::Simplex(_) => u.to_vec(),
            Chart::SphereProjection { dropped, sign, .. } => {
                let h = sign * (1.0 - norm_sq(u)).max(0.0).sqrt();
                let mut out = Vec::with_capacity(u.len() + 1);
                out.extend_from_slice(&u[..dropped]);
                out.push(h);
                out.extend_from_slice(&u[dropped..]);
                out
            }
        }
    }

    /// Metric in chart coordinates.
    pub fn metric(&self, u: &[f64]) -> Result<MetricEval> {
        match *self {
            Chart::Ball(_) | Chart::SphereProjection { .. } => ball_metric(u),
            Chart::Simplex(_) => simplex_metric(u),
        }
    }
}

/// Smallest boundary clearance at which finite-difference stencils run.
pub const MIN_CLEARANCE: f64 = 1e-3;

/// A metric given in one coordinate chart.
pub trait ChartMetric: Sync {
    fn dim(&self) -> usize;

    fn metric(&self, u: &[f64]) -> Result<MetricEval>;

    /// Distance-like margin to the edge of the chart (negative outside).
    fn clearance(&self, u: &[f64]) -> f64;
}

impl ChartMetric for Chart {
    fn dim(&self) -> usize {
        Chart::dim(self)
    }

    fn metric(&self, u: &[f64]) -> Result<MetricEval> {
        Chart::metric(self, u)
    }

    fn clearance(&self, u: &[f64]) -> f64 {
        match *self {
            Chart::Ball(_) | Chart::SphereProjection { .. } => 1.0 - norm_sq(u).sqrt(),
            Chart::Simplex(_) => {
                let gap = 1.0 - u.iter().sum::<f64>();
                u.iter().copied().fold(gap, f64::min)
            }
        }
    }
}

pub(crate) fn require_clearance<M: ChartMetric + ?Sized>(m: &M, u: &[f64]) -> Result<()> {
    let c = m.clearance(u);
    if !(c >= MIN_CLEARANCE) {
        return Err(Error::Stencil(format!(
            "{u:?} (boundary clearance {c:.3e} < {MIN_CLEARANCE:e})"
        )));
    }
    Ok(())
}

/// Metric tensor, inverse and `√det g` at `x`.
///
/// For sphere points the matrices are `(n-1)×(n-1)` in the projection chart
/// [`Chart::at`] picks for `x`.
pub fn metric_eval(domain: DomainSpec, x: &ChartPoint) -> Result<MetricEval> {
    check_same_domain(domain, x)?;
    let chart = Chart::at(x);
    chart.metric(&chart.coords_of(x.coords()))
}

/// Density of the equilibrium measure with respect to Lebesgue measure
/// (ball, simplex) or the standard surface measure (sphere).
pub fn equilibrium_density(domain: DomainSpec, x: &ChartPoint) -> Result<f64> {
    check_same_domain(domain, x)?;
    match domain.kind() {
        DomainKind::Ball => Ok(ball_metric(x.coords())?.sqrt_det),
        DomainKind::Simplex => Ok(simplex_metric(x.coords())?.sqrt_det),
        DomainKind::Sphere => Ok(crate::sphere::equilibrium_constant(domain.n())),
    }
}

/// Baran length `δ(x, v) = √(vᵀ G(x) v)` of a tangent vector.
///
/// On the sphere `v` is an ambient vector orthogonal to `x` and the length is
/// its Euclidean norm.
pub fn baran_length(domain: DomainSpec, x: &ChartPoint, v: &[f64]) -> Result<f64> {
    check_same_domain(domain, x)?;
    if v.len() != domain.n() {
        return Err(Error::Parameter(format!(
            "tangent vector has {} components, expected {}",
            v.len(),
            domain.n()
        )));
    }
    match domain.kind() {
        DomainKind::Sphere => {
            let vn = norm_sq(v).sqrt();
            let dot = dot(x.coords(), v);
            if dot.abs() > TANGENT_TOL * vn.max(1.0) {
                return Err(Error::Parameter(format!(
                    "vector is not tangent to the sphere: ⟨x, v⟩ = {dot}"
                )));
            }
            Ok(vn)
        }
        _ => {
            let m = metric_eval(domain, x)?;
            let v = DVector::from_column_slice(v);
            Ok(v.dot(&(&m.g * &v)).max(0.0).sqrt())
        }
    }
}

fn check_same_domain(domain: DomainSpec, x: &ChartPoint) -> Result<()> {
    if x.domain() != domain {
        return Err(Error::Parameter(format!(
            "point belongs to {}, not {domain}",
            x.domain()
        )));
    }
    Ok(())
}

pub(crate) fn norm_sq(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub(crate) fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn delta(i: usize, j: usize) -> f64 {
    if i == j {
        1.0
    } else {
        0.0
    }
}
