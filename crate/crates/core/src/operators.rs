//! Laplace–Beltrami operators of the Baran metrics, `L = -Δ`.
//!
//! Closed forms on polynomials:
//!
//! * ball: `L f = -[Σ ∂_ii f - Σ x_i x_j ∂_ij f - n Σ x_i ∂_i f]`;
//! * simplex: `L f = -𝒟 f` with
//!   `𝒟 f = Σ x_i(1-x_i) ∂_ii f - 2 Σ_{i<j} x_i x_j ∂_ij f + ½ Σ (1-(n+1)x_i) ∂_i f`;
//! * sphere `𝕊^{n-1}`: `L f = -[Δf - Σ x_i x_j ∂_ij f - (n-1) x·∇f]` restricted
//!   to `|x| = 1`.
//!
//! The generic path evaluates
//! `-(1/√g) Σ_i ∂_i(√g Σ_j g^{ij} ∂_j f)` with nested central differences.

use crate::bases::{BasisFunction, MultiIndex};
use crate::geometry::{require_clearance, Chart, ChartMetric, ChartPoint, DomainKind, DomainSpec};
use crate::polyn::PolyN;
use crate::{Error, Result};
use rayon::prelude::*;

/// Step of the difference quotients in [`lb_apply_numeric`].
pub const FD_STEP: f64 = 1e-4;

/// Boundary margin of residual grids.
pub const GRID_MARGIN: f64 = 1e-3;

fn with_unit(e: &[u32], i: usize, down: u32) -> Option<Vec<u32>> {
    if e[i] < down {
        return None;
    }
    let mut d = e.to_vec();
    d[i] -= down;
    Some(d)
}

/// `L x^β = s(s+k) x^β - Σ_i β_i(β_i-1) x^{β-2e_i}` with `k = n - 1` (ball)
/// or `k = n - 2` (sphere).
fn radial_type(f: &PolyN, k: f64) -> PolyN {
    f.map_terms(|e, c| {
        let s = e.iter().sum::<u32>() as f64;
        let mut out = vec![(e.to_vec(), c * s * (s + k))];
        for i in 0..e.len() {
            if let Some(d) = with_unit(e, i, 2) {
                let b = e[i] as f64;
                out.push((d, -c * b * (b - 1.0)));
            }
        }
        out
    })
}

/// `L f` on the ball `B^n`, `n = f.n()`.
pub fn lb_apply_ball(f: &PolyN) -> PolyN {
    radial_type(f, f.n() as f64 - 1.0)
}

/// `𝒟 f` on the simplex (nonpositive: `𝒟 ψ_α = -|α|(|α| + (n-1)/2) ψ_α`).
///
/// On monomials, `𝒟 x^β = -s(s+(n-1)/2) x^β + Σ_i β_i(β_i - ½) x^{β-e_i}`.
pub fn dunkl_xu(f: &PolyN) -> PolyN {
    let n = f.n() as f64;
    f.map_terms(|e, c| {
        let s = e.iter().sum::<u32>() as f64;
        let mut out = vec![(e.to_vec(), -c * s * (s + (n - 1.0) / 2.0))];
        for i in 0..e.len() {
            if let Some(d) = with_unit(e, i, 1) {
                let b = e[i] as f64;
                out.push((d, c * b * (b - 0.5)));
            }
        }
        out
    })
}

/// `L f = -𝒟 f` on the simplex.
pub fn lb_apply_simplex(f: &PolyN) -> PolyN {
    dunkl_xu(f).scale(-1.0)
}

/// A polynomial whose restriction to `𝕊^{n-1}` is `L (f|𝕊^{n-1})`.
pub fn lb_apply_sphere(f: &PolyN) -> PolyN {
    radial_type(f, f.n() as f64 - 2.0)
}

/// Closed-form `L` for `domain`.
pub fn lb_apply(domain: DomainSpec, f: &PolyN) -> Result<PolyN> {
    if f.n() != domain.n() {
        return Err(Error::Parameter(format!(
            "polynomial in {} variables applied on {domain}",
            f.n()
        )));
    }
    Ok(match domain.kind() {
        DomainKind::Ball => lb_apply_ball(f),
        DomainKind::Simplex => lb_apply_simplex(f),
        DomainKind::Sphere => lb_apply_sphere(f),
    })
}

fn offset(u: &[f64], i: usize, h: f64) -> Vec<f64> {
    let mut v = u.to_vec();
    v[i] += h;
    v
}

fn diff4(u: &[f64], i: usize, h: f64, f: &dyn Fn(&[f64]) -> Result<f64>) -> Result<f64> {
    let p2 = f(&offset(u, i, 2.0 * h))?;
    let p1 = f(&offset(u, i, h))?;
    let m1 = f(&offset(u, i, -h))?;
    let m2 = f(&offset(u, i, -2.0 * h))?;
    Ok((8.0 * (p1 - m1) + m2 - p2) / (12.0 * h))
}

/// `-(1/√g) Σ_i ∂_i(√g Σ_j g^{ij} ∂_j f)` at chart coordinates `u`, by nested
/// fourth-order central differences with step [`FD_STEP`].
pub fn lb_apply_numeric_in_chart<M, F>(m: &M, f: F, u: &[f64]) -> Result<f64>
where
    M: ChartMetric + ?Sized,
    F: Fn(&[f64]) -> f64,
{
    require_clearance(m, u)?;
    let h = FD_STEP;
    let d = m.dim();
    let stencil = |e: Error| match e {
        Error::Domain(s) => Error::Stencil(s),
        other => other,
    };
    let grad = |v: &[f64]| -> Result<Vec<f64>> {
        (0..d).map(|j| diff4(v, j, h, &|w| Ok(f(w)))).collect()
    };
    let flux = |i: usize| {
        move |v: &[f64]| -> Result<f64> {
            let me = m.metric(v).map_err(stencil)?;
            let g = grad(v)?;
            Ok(me.sqrt_det * (0..d).map(|j| me.g_inv[(i, j)] * g[j]).sum::<f64>())
        }
    };
    let mut div = 0.0;
    for i in 0..d {
        div += diff4(u, i, h, &flux(i))?;
    }
    let sqrt_det = m.metric(u)?.sqrt_det;
    Ok(-div / sqrt_det)
}

/// Finite-difference `L f (x)`; `f` takes ambient coordinates (for the sphere
/// it is composed with the projection chart at `x`).
pub fn lb_apply_numeric<F>(domain: DomainSpec, f: F, x: &ChartPoint) -> Result<f64>
where
    F: Fn(&[f64]) -> f64,
{
    if x.domain() != domain {
        return Err(Error::Parameter(format!("point belongs to {}, not {domain}", x.domain())));
    }
    let chart = Chart::at(x);
    let u = chart.coords_of(x.coords());
    lb_apply_numeric_in_chart(&chart, |v| f(&chart.lift(v)), &u)
}

/// Tensor grid of cell centres, clipped to the interior with margin
/// [`GRID_MARGIN`]; sphere grids are the cube grid projected radially.
pub fn interior_grid(domain: DomainSpec, grid_size: usize) -> Vec<Vec<f64>> {
    let n = domain.n();
    let g = grid_size.max(1);
    let (lo, hi) = match domain.kind() {
        DomainKind::Simplex => (0.0, 1.0),
        _ => (-1.0, 1.0),
    };
    let axis: Vec<f64> = (0..g)
        .map(|i| lo + (hi - lo) * (i as f64 + 0.5) / g as f64)
        .collect();
    let total = g.pow(n as u32);
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    for _ in 0..total {
        let x: Vec<f64> = idx.iter().map(|&i| axis[i]).collect();
        match domain.kind() {
            DomainKind::Ball => {
                if crate::geometry::norm_sq(&x).sqrt() <= 1.0 - GRID_MARGIN {
                    out.push(x);
                }
            }
            DomainKind::Simplex => {
                let gap = 1.0 - x.iter().sum::<f64>();
                if x.iter().copied().fold(gap, f64::min) >= GRID_MARGIN {
                    out.push(x);
                }
            }
            DomainKind::Sphere => {
                let r = crate::geometry::norm_sq(&x).sqrt();
                if r > 0.1 {
                    out.push(x.iter().map(|v| v / r).collect());
                }
            }
        }
        for k in (0..n).rev() {
            idx[k] += 1;
            if idx[k] < g {
                break;
            }
            idx[k] = 0;
        }
    }
    out
}

/// `max |(L b - λ b)(x)| / max |b(x)|` over the interior grid, using the
/// closed-form operator and the eigenvalue `λ` supplied.
pub fn eigen_residual_with(basis: &BasisFunction, lambda: f64, grid_size: usize) -> Result<f64> {
    let p = basis.polynomial();
    let lp = lb_apply(basis.domain(), &p)?;
    let r = lp.sub(&p.scale(lambda));
    let grid = interior_grid(basis.domain(), grid_size);
    let (num, den) = grid
        .par_iter()
        .map(|x| (r.eval(x).abs(), basis.eval(x).abs()))
        .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
    if den == 0.0 {
        return Err(Error::Parameter("basis function vanishes on the grid".into()));
    }
    Ok(num / den)
}

/// Relative residual of the eigen-relation `L b = λ_{deg b} b`.
pub fn eigen_residual_of(basis: &BasisFunction, grid_size: usize) -> Result<f64> {
    eigen_residual_with(basis, basis.eigenvalue(), grid_size)
}

/// Relative residual of `L φ_α = λ_{|α|} φ_α` (ball) or `L ψ_α = λ_{|α|} ψ_α`
/// (simplex) on a `grid_sizeⁿ` grid.
pub fn eigen_residual(domain: DomainSpec, alpha: &MultiIndex, grid_size: usize) -> Result<f64> {
    eigen_residual_of(&BasisFunction::new(domain, alpha.clone())?, grid_size)
}

/// Dirichlet form `∫ ⟨grad u, grad v⟩_g dμ` by quadrature (ball, simplex:
/// `∇uᵀ G⁻¹ ∇v`; sphere: tangential gradients).
pub fn dirichlet_form(rule: &crate::quadrature::QuadratureRule, u: &PolyN, v: &PolyN) -> Result<f64> {
    let domain = rule.domain();
    let n = domain.n();
    if u.n() != n || v.n() != n {
        return Err(Error::Parameter("polynomial dimension does not match the rule".into()));
    }
    let du: Vec<PolyN> = (0..n).map(|i| u.derivative(i)).collect();
    let dv: Vec<PolyN> = (0..n).map(|i| v.derivative(i)).collect();
    let integrand = |x: &[f64]| -> f64 {
        let gu: Vec<f64> = du.iter().map(|p| p.eval(x)).collect();
        let gv: Vec<f64> = dv.iter().map(|p| p.eval(x)).collect();
        match domain.kind() {
            DomainKind::Ball => {
                // G⁻¹ = I - x xᵀ
                let xu: f64 = x.iter().zip(&gu).map(|(a, b)| a * b).sum();
                let xv: f64 = x.iter().zip(&gv).map(|(a, b)| a * b).sum();
                gu.iter().zip(&gv).map(|(a, b)| a * b).sum::<f64>() - xu * xv
            }
            DomainKind::Simplex => {
                // G⁻¹ = diag(x) - x xᵀ
                let xu: f64 = x.iter().zip(&gu).map(|(a, b)| a * b).sum();
                let xv: f64 = x.iter().zip(&gv).map(|(a, b)| a * b).sum();
                x.iter().zip(gu.iter().zip(&gv)).map(|(c, (a, b))| c * a * b).sum::<f64>() - xu * xv
            }
            DomainKind::Sphere => {
                // (I - x xᵀ) on |x| = 1
                let xu: f64 = x.iter().zip(&gu).map(|(a, b)| a * b).sum();
                let xv: f64 = x.iter().zip(&gv).map(|(a, b)| a * b).sum();
                gu.iter().zip(&gv).map(|(a, b)| a * b).sum::<f64>() - xu * xv
            }
        }
    };
    Ok(rule.integrate(integrand))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::basis_functions;
    use crate::orthopoly1d::{chebyshev_poly, ChebyshevKind};
    use approx::assert_abs_diff_eq;

    fn to_polyn(p: &crate::orthopoly1d::Poly1D) -> PolyN {
        PolyN::from_terms(1, p.coeffs().iter().enumerate().map(|(k, &c)| (vec![k as u32], c))).unwrap()
    }

    #[test]
    fn constants_are_annihilated() {
        for n in 1..=3 {
            let c = PolyN::constant(n, 3.0);
            assert!(lb_apply_ball(&c).is_zero());
            assert!(lb_apply_simplex(&c).is_zero());
        }
    }

    #[test]
    fn chebyshev_sturm_liouville() {
        for k in 0..=20 {
            let t = to_polyn(&chebyshev_poly(ChebyshevKind::First, k).unwrap());
            let lt = lb_apply_ball(&t);
            assert!(lt.max_coeff_diff(&t.scale((k * k) as f64)) <= 1e-12 * t.max_coeff().max(1.0));
        }
        let t2 = to_polyn(&chebyshev_poly(ChebyshevKind::First, 2).unwrap());
        assert_eq!(lb_apply_ball(&t2), t2.scale(4.0));
    }

    #[test]
    fn degree_one_ball() {
        let x = PolyN::variable(2, 0);
        assert_eq!(lb_apply_ball(&x), x.scale(2.0));
    }

    #[test]
    fn simplex_shifted_monomial_is_not_an_eigenfunction() {
        // 𝒟(x - 1/2) = 1/2 - x on the interval
        let f = &PolyN::variable(1, 0) - &PolyN::constant(1, 0.5);
        assert_eq!(dunkl_xu(&f), f.scale(-1.0));
        let psi = BasisFunction::new(DomainSpec::simplex(1).unwrap(), MultiIndex::new(vec![1]).unwrap()).unwrap();
        let p = psi.polynomial();
        assert!(lb_apply_simplex(&p).max_coeff_diff(&p.scale(psi.eigenvalue())) <= 1e-14);
    }

    #[test]
    fn numeric_matches_closed_form() {
        let d = DomainSpec::ball(2).unwrap();
        let b = BasisFunction::new(d, MultiIndex::new(vec![1, 0]).unwrap()).unwrap();
        let lp = lb_apply_ball(&b.polynomial());
        let x = ChartPoint::new(d, vec![0.3, -0.2]).unwrap();
        let num = lb_apply_numeric(d, |v| b.eval(v), &x).unwrap();
        assert_abs_diff_eq!(num, lp.eval(x.coords()), epsilon = 5e-5);
        let c = lb_apply_numeric(d, |_| 2.0, &x).unwrap();
        assert!(c.abs() <= 1e-6);

        let s = DomainSpec::simplex(2).unwrap();
        let y = ChartPoint::new(s, vec![0.2, 0.5]).unwrap();
        for b in basis_functions(s, 3).unwrap() {
            let lp = lb_apply_simplex(&b.polynomial());
            let num = lb_apply_numeric(s, |v| b.eval(v), &y).unwrap();
            assert_abs_diff_eq!(num, lp.eval(y.coords()), epsilon = 5e-5);
        }
    }

    #[test]
    fn sphere_operator_on_harmonics() {
        let d = DomainSpec::sphere(3).unwrap();
        let x = ChartPoint::new(d, vec![0.48, -0.6, 0.64]).unwrap();
        for b in basis_functions(d, 4).unwrap() {
            let lp = lb_apply_sphere(&b.polynomial());
            assert_abs_diff_eq!(lp.eval(x.coords()), b.eigenvalue() * b.eval(x.coords()), epsilon = 1e-10);
            let num = lb_apply_numeric(d, |v| b.eval(v), &x).unwrap();
            assert_abs_diff_eq!(num, b.eigenvalue() * b.eval(x.coords()), epsilon = 5e-5);
        }
    }

    #[test]
    fn trivial_residual() {
        let d = DomainSpec::simplex(3).unwrap();
        assert_eq!(eigen_residual(d, &MultiIndex::zero(3), 10).unwrap(), 0.0);
    }

    #[test]
    fn stencil_error_near_boundary() {
        let d = DomainSpec::simplex(2).unwrap();
        let x = ChartPoint::new(d, vec![1e-4, 0.5]).unwrap();
        assert!(matches!(lb_apply_numeric(d, |v| v[0], &x), Err(Error::Stencil(_))));
    }
}
