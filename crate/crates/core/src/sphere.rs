//! The real sphere inside its complexification.
//!
//! On `𝒮^{n-1} = {z ∈ ℂⁿ : Σ z_i² = 1}` the extremal function of the real
//! sphere is `V*(z) = ½ log(|z|² + √(|z|⁴ - 1))`. Writing `z = a + ib`, the
//! constraint gives `|z|⁴ - 1 = 4|a ∧ b|²`, which is the form evaluated here.

use crate::geometry::{norm_sq, MetricEval, ChartMetric, TANGENT_TOL};
use crate::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Tolerance on `Σ z_i² = 1`.
pub const CONSTRAINT_TOL: f64 = 1e-8;

/// A point of the complexified sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpherePoint {
    z: Vec<Complex64>,
}

impl ComplexSpherePoint {
    pub fn new(z: Vec<Complex64>) -> Result<Self> {
        if z.len() < 2 {
            return Err(Error::Parameter("need at least two complex coordinates".into()));
        }
        let s: Complex64 = z.iter().map(|w| w * w).sum();
        if (s - 1.0).norm() > CONSTRAINT_TOL {
            return Err(Error::Domain(format!("Σ z_i² = {s} is not 1")));
        }
        Ok(ComplexSpherePoint { z })
    }

    /// `(cosh t, i sinh t, 0, …, 0)`.
    pub fn hyperbolic(n: usize, t: f64) -> Result<Self> {
        let mut z = vec![Complex64::new(0.0, 0.0); n.max(2)];
        z[0] = Complex64::new(t.cosh(), 0.0);
        z[1] = Complex64::new(0.0, t.sinh());
        Self::new(z)
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.z
    }
}

/// `V*(z) = ½ log(|z|² + 2|Re z ∧ Im z|)`, clamped at 0.
pub fn extremal_eval(z: &ComplexSpherePoint) -> f64 {
    let a: Vec<f64> = z.z.iter().map(|w| w.re).collect();
    let b: Vec<f64> = z.z.iter().map(|w| w.im).collect();
    let (aa, bb) = (norm_sq(&a), norm_sq(&b));
    if bb == 0.0 {
        return 0.0;
    }
    let ab: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
    let wedge = (aa * bb - ab * ab).max(0.0).sqrt();
    (0.5 * (aa + bb - 1.0 + 2.0 * wedge).ln_1p()).max(0.0)
}

/// Right derivative at `t = 0` of `V*` along
/// `z(t) = √(1 + |v|² log²(1+t)) x + i log(1+t) v`, by Richardson
/// extrapolation of `V*(z(t))/t` over `t = 10⁻²·2^{-k}`.
pub fn tangent_derivative(x: &[f64], v: &[f64]) -> Result<f64> {
    if x.len() != v.len() || x.len() < 2 {
        return Err(Error::Parameter("x and v must have the same length >= 2".into()));
    }
    let r = norm_sq(x).sqrt();
    if (r - 1.0).abs() > crate::geometry::SPHERE_TOL {
        return Err(Error::Domain(format!("|x| = {r} is not 1")));
    }
    let vn = norm_sq(v).sqrt();
    let dot: f64 = x.iter().zip(v).map(|(a, b)| a * b).sum();
    if dot.abs() > TANGENT_TOL * vn.max(1.0) {
        return Err(Error::Parameter(format!("v is not tangent: ⟨x, v⟩ = {dot}")));
    }
    if vn == 0.0 {
        return Ok(0.0);
    }
    let quotient = |t: f64| -> Result<f64> {
        let l = t.ln_1p();
        let s = (1.0 + vn * vn * l * l).sqrt();
        let z = x
            .iter()
            .zip(v)
            .map(|(a, b)| Complex64::new(s * a, l * b))
            .collect();
        // the constraint holds up to rounding in |x|
        Ok(extremal_eval(&ComplexSpherePoint { z }) / t)
    };
    const LEVELS: usize = 6;
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(LEVELS);
    for k in 0..LEVELS {
        let t = 1e-2 / 2f64.powi(k as i32);
        let mut row = vec![quotient(t)?];
        for j in 1..=k {
            let f = 2f64.powi(j as i32);
            let prev = &table[k - 1];
            row.push((f * row[j - 1] - prev[j - 1]) / (f - 1.0));
        }
        table.push(row);
    }
    Ok(table[LEVELS - 1][LEVELS - 1])
}

/// `c_{n-1} = Γ(n/2) / (2π^{n/2})`, the density of the equilibrium measure
/// of `𝕊^{n-1}` against surface measure.
pub fn equilibrium_constant(n: usize) -> f64 {
    let h = n as f64 / 2.0;
    statrs::function::gamma::gamma(h) / (2.0 * PI.powf(h))
}

/// Polar chart `(θ, φ) ↦ (sin θ cos φ, sin θ sin φ, cos θ)` of `𝕊²`, metric
/// `diag(1, sin²θ)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct AngleChart;

impl AngleChart {
    pub fn to_ambient(u: &[f64]) -> [f64; 3] {
        let (st, ct) = u[0].sin_cos();
        let (sp, cp) = u[1].sin_cos();
        [st * cp, st * sp, ct]
    }
}

impl ChartMetric for AngleChart {
    fn dim(&self) -> usize {
        2
    }

    fn metric(&self, u: &[f64]) -> Result<MetricEval> {
        let s = u[0].sin();
        if !(s > 0.0) {
            return Err(Error::Domain(format!("θ = {} is not in (0, π)", u[0])));
        }
        Ok(MetricEval {
            g: DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, s * s])),
            g_inv: DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, 1.0 / (s * s)])),
            sqrt_det: s,
        })
    }

    fn clearance(&self, u: &[f64]) -> f64 {
        u[0].min(PI - u[0])
    }
}

/// `max |L Y - l(l+1) Y| / max |Y|` for the real harmonic `Y_l^m` on `𝕊²`,
/// with `L` evaluated by finite differences in the polar chart on a
/// `grid × 2grid` grid with `θ ∈ [0.2, π - 0.2]`.
pub fn harmonic_angle_residual(l: usize, m: i64, grid: usize) -> Result<f64> {
    let d = crate::geometry::DomainSpec::sphere(3)?;
    let b = crate::bases::BasisFunction::harmonic(d, l, m)?;
    let f = |u: &[f64]| b.eval(&AngleChart::to_ambient(u));
    let lam = b.eigenvalue();
    let g = grid.max(2);
    let (mut num, mut den) = (0.0f64, 0.0f64);
    for i in 0..g {
        let th = 0.2 + (PI - 0.4) * i as f64 / (g - 1) as f64;
        for j in 0..2 * g {
            let ph = 2.0 * PI * j as f64 / (2 * g) as f64;
            let u = [th, ph];
            let lu = crate::operators::lb_apply_numeric_in_chart(&AngleChart, f, &u)?;
            let y = f(&u);
            num = num.max((lu - lam * y).abs());
            den = den.max(y.abs());
        }
    }
    Ok(num / den)
}
