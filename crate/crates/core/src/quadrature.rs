//! Gauss–Jacobi rules and cubature against the equilibrium measures.
//!
//! * Ball: the iterated map `x_1 = t_1`, `x_j = t_j Π_{k<j} √(1 - t_k²)` turns
//!   `∫_{B^n} f dμ` into a product of Gauss–Gegenbauer integrals with weights
//!   `(1 - t_k²)^{(n-k-1)/2}`.
//! * Simplex: `x_i = ξ_i²` maps `μ_S` to the even part of `μ_B`; the ball rule
//!   is folded onto the positive orthant.
//! * Sphere `𝕊^{n-1}`: both hemispheres are graphs over `B^{n-1}` and the
//!   surface measure pulls back to `μ_{B^{n-1}}`.

use crate::bases::{basis_functions, BasisFunction};
use crate::geometry::{ChartPoint, DomainKind, DomainSpec};
use crate::orthopoly1d::{monic_jacobi_eval_with_derivative, JacobiParams};
use crate::{Error, Result};
use nalgebra::{DMatrix, SymmetricEigen};

/// Largest polynomial exactness [`domain_rule`] builds.
pub const MAX_EXACTNESS: usize = 24;

/// One-dimensional rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule1D {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Rule1D {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * f(t)).sum()
    }
}

/// `m`-point Gauss rule for the weight `(1-t)^a (1+t)^b`, exact up to degree
/// `2m - 1`.
///
/// Golub–Welsch eigenvalues, refined by Newton steps on `J_m`, with
/// Christoffel weights `1 / Σ_{k<m} J_k(t)² / ‖J_k‖²`.
pub fn gauss_jacobi_rule(m: usize, p: JacobiParams) -> Result<Rule1D> {
    if m == 0 {
        return Err(Error::Parameter("a Gauss rule needs at least one node".into()));
    }
    let mut jac = DMatrix::<f64>::zeros(m, m);
    for k in 0..m {
        let (beta, _) = p.recurrence(k);
        jac[(k, k)] = beta;
        if k + 1 < m {
            let g = p.recurrence(k + 1).1.sqrt();
            jac[(k, k + 1)] = g;
            jac[(k + 1, k)] = g;
        }
    }
    let mut nodes: Vec<f64> = SymmetricEigen::new(jac).eigenvalues.iter().copied().collect();
    nodes.sort_by(f64::total_cmp);

    for t in nodes.iter_mut() {
        for _ in 0..3 {
            let (v, d) = monic_jacobi_eval_with_derivative(m, p, *t);
            if d == 0.0 {
                break;
            }
            let next = *t - v / d;
            if !(next > -1.0 && next < 1.0) {
                break;
            }
            *t = next;
        }
    }

    let norms: Vec<f64> = {
        let mut acc = 1.0;
        (0..m)
            .map(|k| {
                acc *= p.recurrence(k).1;
                acc
            })
            .collect()
    };
    let weights = nodes
        .iter()
        .map(|&t| {
            let (b0, _) = p.recurrence(0);
            let mut sum = 1.0 / norms[0];
            let (mut prev, mut cur) = (1.0, t - b0);
            for (k, nk) in norms.iter().enumerate().skip(1) {
                sum += cur * cur / nk;
                let (beta, gamma) = p.recurrence(k);
                let next = (t - beta) * cur - gamma * prev;
                prev = cur;
                cur = next;
            }
            1.0 / sum
        })
        .collect();
    Ok(Rule1D { nodes, weights })
}

/// Cubature rule against the equilibrium measure of a domain.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    domain: DomainSpec,
    nodes: Vec<Vec<f64>>,
    weights: Vec<f64>,
    exactness: usize,
}

impl QuadratureRule {
    pub fn domain(&self) -> DomainSpec {
        self.domain
    }

    /// Node coordinates (ambient unit vectors for the sphere).
    pub fn nodes(&self) -> &[Vec<f64>] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn exactness(&self) -> usize {
        self.exactness
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes as validated [`ChartPoint`]s.
    pub fn points(&self) -> Result<Vec<ChartPoint>> {
        self.nodes
            .iter()
            .map(|x| ChartPoint::new(self.domain, x.clone()))
            .collect()
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn integrate(&self, f: impl Fn(&[f64]) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, &w)| w * f(x)).sum()
    }
}

fn nodes_for(exactness: usize) -> usize {
    (exactness + 3) / 2
}

/// Tensor rule for `μ_{B^n}` in the `t` variables, mapped to `x`.
fn ball_rule(n: usize, m: usize) -> Result<(Vec<Vec<f64>>, Vec<f64>)> {
    let axes = (1..=n)
        .map(|k| gauss_jacobi_rule(m, JacobiParams::symmetric((n - k) as f64 / 2.0 - 0.5)?))
        .collect::<Result<Vec<_>>>()?;
    let total = m.pow(n as u32);
    let mut nodes = Vec::with_capacity(total);
    let mut weights = Vec::with_capacity(total);
    let mut idx = vec![0usize; n];
    for _ in 0..total {
        let mut x = vec![0.0; n];
        let mut w = 1.0;
        let mut r = 1.0;
        for k in 0..n {
            let t = axes[k].nodes[idx[k]];
            w *= axes[k].weights[idx[k]];
            x[k] = t * r;
            r *= (1.0 - t * t).sqrt();
        }
        nodes.push(x);
        weights.push(w);
        for k in (0..n).rev() {
            idx[k] += 1;
            if idx[k] < m {
                break;
            }
            idx[k] = 0;
        }
    }
    Ok((nodes, weights))
}

/// Rule integrating every polynomial of total degree `≤ exactness` against
/// the equilibrium measure of `domain` exactly.
pub fn domain_rule(domain: DomainSpec, exactness: usize) -> Result<QuadratureRule> {
    if exactness > MAX_EXACTNESS {
        return Err(Error::Range(format!(
            "exactness {exactness} exceeds the supported maximum {MAX_EXACTNESS}"
        )));
    }
    let n = domain.n();
    let (nodes, weights) = match domain.kind() {
        DomainKind::Ball => ball_rule(n, nodes_for(exactness))?,
        DomainKind::Simplex => {
            // even node count: no node on a coordinate hyperplane
            let m = nodes_for(2 * exactness);
            let m = m + m % 2;
            let (xi, w) = ball_rule(n, m)?;
            let fold = 2f64.powi(n as i32);
            xi.into_iter()
                .zip(w)
                .filter(|(x, _)| x.iter().all(|&c| c > 0.0))
                .map(|(x, w)| (x.iter().map(|c| c * c).collect(), w * fold))
                .unzip()
        }
        DomainKind::Sphere => {
            let (u, w) = ball_rule(n - 1, nodes_for(exactness))?;
            let c = crate::sphere::equilibrium_constant(n);
            let mut nodes = Vec::with_capacity(2 * u.len());
            let mut weights = Vec::with_capacity(2 * u.len());
            for (u, w) in u.into_iter().zip(w) {
                let h = (1.0 - crate::geometry::norm_sq(&u)).sqrt();
                for s in [1.0, -1.0] {
                    let mut x = u.clone();
                    x.push(s * h);
                    nodes.push(x);
                    weights.push(w * c);
                }
            }
            (nodes, weights)
        }
    };
    Ok(QuadratureRule {
        domain,
        nodes,
        weights,
        exactness,
    })
}

/// `Σ w_i f(x_i) g(x_i)`.
pub fn inner_product(
    rule: &QuadratureRule,
    f: impl Fn(&[f64]) -> f64,
    g: impl Fn(&[f64]) -> f64,
) -> f64 {
    rule.integrate(|x| f(x) * g(x))
}

/// Gram matrix of the basis functions of degree `≤ max_degree`.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub basis: Vec<BasisFunction>,
    pub matrix: DMatrix<f64>,
}

impl GramMatrix {
    /// `max_{i≠j} |G_ij| / √(G_ii G_jj)`.
    pub fn max_off_diagonal_ratio(&self) -> f64 {
        let g = &self.matrix;
        let mut worst = 0.0f64;
        for i in 0..g.nrows() {
            for j in 0..g.ncols() {
                if i != j {
                    worst = worst.max(g[(i, j)].abs() / (g[(i, i)] * g[(j, j)]).sqrt());
                }
            }
        }
        worst
    }

    /// `max_i |G_ii / ‖b_i‖² - 1|` against the closed-form norms.
    pub fn max_norm_deviation(&self) -> f64 {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, b)| (self.matrix[(i, i)] / b.norm_sq() - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

/// Pairwise inner products of the basis of degree `≤ max_degree`, using a
/// rule exact for degree `2 max_degree`.
pub fn gram_matrix(domain: DomainSpec, max_degree: usize) -> Result<GramMatrix> {
    let basis = basis_functions(domain, max_degree)?;
    let rule = domain_rule(domain, 2 * max_degree)?;
    let values: Vec<Vec<f64>> = basis
        .iter()
        .map(|b| rule.nodes().iter().map(|x| b.eval(x)).collect())
        .collect();
    let k = basis.len();
    let mut matrix = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..=i {
            let v: f64 = rule
                .weights()
                .iter()
                .zip(values[i].iter().zip(&values[j]))
                .map(|(w, (a, b))| w * a * b)
                .sum();
            matrix[(i, j)] = v;
            matrix[(j, i)] = v;
        }
    }
    Ok(GramMatrix { basis, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn gauss_legendre_two_points() {
        let r = gauss_jacobi_rule(2, JacobiParams::new(0.0, 0.0).unwrap()).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert_abs_diff_eq!(r.nodes()[0], -s, epsilon = 1e-15);
        assert_abs_diff_eq!(r.nodes()[1], s, epsilon = 1e-15);
        assert_abs_diff_eq!(r.weights()[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(r.weights()[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn gauss_chebyshev_nodes_and_mass() {
        let p = JacobiParams::symmetric(-0.5).unwrap();
        for m in 1..=20 {
            let r = gauss_jacobi_rule(m, p).unwrap();
            assert_abs_diff_eq!(r.weights().iter().sum::<f64>(), PI, epsilon = 1e-12);
            for (k, &t) in r.nodes().iter().enumerate() {
                let expect = -(((2 * k + 1) as f64) * PI / (2 * m) as f64).cos();
                assert_abs_diff_eq!(t, expect, epsilon = 1e-14);
                assert_abs_diff_eq!(r.weights()[k], PI / m as f64, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn exact_for_degree_2m_minus_1() {
        for &(a, b) in &[(0.0, 0.0), (-0.5, -0.5), (1.5, -0.5), (3.0, 0.5), (0.5, 4.0)] {
            let p = JacobiParams::new(a, b).unwrap();
            for m in 1..=12 {
                let r = gauss_jacobi_rule(m, p).unwrap();
                assert!(r.weights().iter().all(|&w| w > 0.0));
                // moments against the monic orthogonal polynomials: ∫ J_k = 0 for k ≥ 1
                for k in 1..2 * m {
                    let v = r.integrate(|t| crate::orthopoly1d::monic_jacobi_eval(k, p, t));
                    let scale = crate::orthopoly1d::monic_jacobi_norm_sq(k / 2, p).sqrt()
                        * crate::orthopoly1d::monic_jacobi_norm_sq(k - k / 2, p).sqrt();
                    assert!(v.abs() <= 1e-12 * scale.max(1e-300) + 1e-14, "a={a} b={b} m={m} k={k}: {v}");
                }
                assert_abs_diff_eq!(r.weights().iter().sum::<f64>(), p.mass(), epsilon = 1e-12 * p.mass());
            }
        }
    }

    #[test]
    fn odd_moment_vanishes() {
        let p = JacobiParams::symmetric(0.5).unwrap();
        let r = gauss_jacobi_rule(7, p).unwrap();
        assert!(r.integrate(|t| t.powi(13)).abs() <= 1e-12);
    }

    #[test]
    fn total_masses() {
        let cases = [
            (DomainSpec::ball(2).unwrap(), 2.0 * PI),
            (DomainSpec::ball(3).unwrap(), PI * PI),
            (DomainSpec::ball(1).unwrap(), PI),
            (DomainSpec::simplex(1).unwrap(), PI),
            (DomainSpec::simplex(2).unwrap(), 2.0 * PI),
            (DomainSpec::simplex(3).unwrap(), PI * PI),
            (DomainSpec::sphere(2).unwrap(), 1.0),
            (DomainSpec::sphere(3).unwrap(), 1.0),
            (DomainSpec::sphere(5).unwrap(), 1.0),
        ];
        for (d, mass) in cases {
            for e in [0, 3, 10] {
                let r = domain_rule(d, e).unwrap();
                assert_abs_diff_eq!(r.total_mass(), mass, epsilon = 1e-10);
                assert!(r.weights().iter().all(|&w| w > 0.0));
                for x in r.nodes() {
                    d.check_point(x).unwrap();
                }
            }
        }
    }

    #[test]
    fn ball_second_moments() {
        let d = DomainSpec::ball(2).unwrap();
        let r = domain_rule(d, 4).unwrap();
        assert_abs_diff_eq!(inner_product(&r, |x| x[1], |x| x[1]), 2.0 * PI / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inner_product(&r, |x| x[0], |x| x[1]), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn simplex_moment_matches_dirichlet_integral() {
        // ∫ x_1 dμ_S on S^2 = Γ(3/2)Γ(1/2)²/Γ(5/2) = 2π/3
        let r = domain_rule(DomainSpec::simplex(2).unwrap(), 2).unwrap();
        assert_abs_diff_eq!(r.integrate(|x| x[0]), 2.0 * PI / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.integrate(|x| x[0] * x[1]), 4.0 * PI / 15.0 * 0.5, epsilon = 1e-12);
    }

    #[test]
    fn sphere_moments() {
        let r = domain_rule(DomainSpec::sphere(3).unwrap(), 4).unwrap();
        assert_abs_diff_eq!(r.integrate(|x| x[2] * x[2]), 1.0 / 3.0, epsilon = 1e-13);
        assert_abs_diff_eq!(r.integrate(|x| x[0].powi(4)), 0.2, epsilon = 1e-13);
        assert_abs_diff_eq!(r.integrate(|x| x[0] * x[0] * x[1] * x[1]), 1.0 / 15.0, epsilon = 1e-13);
    }

    #[test]
    fn exactness_limit() {
        assert!(matches!(
            domain_rule(DomainSpec::ball(2).unwrap(), 25),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn constant_gram_matrix() {
        let g = gram_matrix(DomainSpec::ball(2).unwrap(), 0).unwrap();
        assert_eq!(g.matrix.nrows(), 1);
        assert_abs_diff_eq!(g.matrix[(0, 0)], 2.0 * PI, epsilon = 1e-12);
    }
}
