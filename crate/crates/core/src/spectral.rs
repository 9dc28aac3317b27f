//! Fourier analysis against the equilibrium measure, Sobolev partial sums and
//! the Baran inequality.

use crate::bases::{basis_functions, BasisFunction, BasisKey};
use crate::geometry::{baran_length, ChartPoint, DomainKind, DomainSpec};
use crate::operators::dirichlet_form;
use crate::polyn::PolyN;
use crate::quadrature::{domain_rule, QuadratureRule, MAX_EXACTNESS};
use crate::sampling;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Coefficients `û_α = ⟨f, φ̂_α⟩` against the orthonormalised basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralExpansion {
    domain: DomainSpec,
    max_degree: usize,
    basis: Vec<BasisFunction>,
    coeffs: Vec<f64>,
}

impl SpectralExpansion {
    pub fn zero(domain: DomainSpec, max_degree: usize) -> Result<Self> {
        let basis = basis_functions(domain, max_degree)?;
        let coeffs = vec![0.0; basis.len()];
        Ok(SpectralExpansion {
            domain,
            max_degree,
            basis,
            coeffs,
        })
    }

    pub fn domain(&self) -> DomainSpec {
        self.domain
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn basis(&self) -> &[BasisFunction] {
        &self.basis
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn coeff(&self, key: &BasisKey) -> Option<f64> {
        self.basis.iter().position(|b| b.key() == key).map(|i| self.coeffs[i])
    }

    /// `E_s = Σ_{deg = s} |û|²` for `s = 0..=max_degree`.
    pub fn degree_energies(&self) -> Vec<f64> {
        let mut e = vec![0.0; self.max_degree + 1];
        for (b, c) in self.basis.iter().zip(&self.coeffs) {
            e[b.degree()] += c * c;
        }
        e
    }

    /// Parseval partial sum `Σ |û|²`.
    pub fn energy(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// `Σ û_α φ̂_α(x)` at raw coordinates.
    pub fn eval(&self, x: &[f64]) -> f64 {
        self.basis
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| **c != 0.0)
            .map(|(b, c)| c * b.eval_normalized(x))
            .sum()
    }
}

fn projection_exactness(max_degree: usize) -> usize {
    (2 * max_degree + 2).min(MAX_EXACTNESS)
}

/// Projection of `f` onto the basis of degree `≤ max_degree`, with a rule of
/// exactness `min(2 max_degree + 2, 24)`.
pub fn project(domain: DomainSpec, f: impl Fn(&[f64]) -> f64 + Sync, max_degree: usize) -> Result<SpectralExpansion> {
    let rule = domain_rule(domain, projection_exactness(max_degree))?;
    project_with_rule(&rule, f, max_degree)
}

/// Projection using a caller-supplied rule.
pub fn project_with_rule(
    rule: &QuadratureRule,
    f: impl Fn(&[f64]) -> f64 + Sync,
    max_degree: usize,
) -> Result<SpectralExpansion> {
    let mut e = SpectralExpansion::zero(rule.domain(), max_degree)?;
    let fx: Vec<f64> = rule.nodes().par_iter().map(|x| f(x)).collect();
    let coeffs: Vec<f64> = e
        .basis
        .par_iter()
        .map(|b| {
            rule.nodes()
                .iter()
                .zip(rule.weights())
                .zip(&fx)
                .map(|((x, w), v)| w * v * b.eval_normalized(x))
                .sum()
        })
        .collect();
    e.coeffs = coeffs;
    Ok(e)
}

/// `Σ û_α φ̂_α(x)`.
pub fn evaluate_expansion(e: &SpectralExpansion, x: &ChartPoint) -> Result<f64> {
    if x.domain() != e.domain {
        return Err(Error::Parameter(format!("point belongs to {}, not {}", x.domain(), e.domain)));
    }
    Ok(e.eval(x.coords()))
}

/// Sobolev partial sums of an expansion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SobolevSums {
    /// `Σ_s λ_s² E_s`.
    pub s2: f64,
    /// `Σ_s λ_s E_s`.
    pub s1: f64,
    /// `E_s = Σ_{|α| = s} |û_α|²`.
    pub degree_energies: Vec<f64>,
    /// Least-squares slope of `ln(λ_s² E_s)` against `s` over the degrees
    /// `s ≥ 1` with `E_s > 0` (negative: geometric decay of the `S2` terms).
    pub growth_rate: Option<f64>,
}

pub fn sobolev_sums(e: &SpectralExpansion) -> SobolevSums {
    let energies = e.degree_energies();
    let lambda = |s: usize| crate::bases::eigenvalue(e.domain, s);
    let s1 = energies.iter().enumerate().map(|(s, v)| lambda(s) * v).sum();
    let s2 = energies.iter().enumerate().map(|(s, v)| lambda(s).powi(2) * v).sum();
    let pts: Vec<(f64, f64)> = energies
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, v)| **v > 1e-300)
        .map(|(s, v)| (s as f64, (lambda(s).powi(2) * v).ln()))
        .collect();
    let growth_rate = if pts.len() >= 2 {
        let k = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        Some(sxy / sxx)
    } else {
        None
    };
    SobolevSums {
        s2,
        s1,
        degree_energies: energies,
        growth_rate,
    }
}

/// `∫ |grad f|²_g dμ` by quadrature exact for the integrand.
pub fn dirichlet_energy(domain: DomainSpec, f: &PolyN) -> Result<f64> {
    let rule = domain_rule(domain, (2 * f.degree()).min(MAX_EXACTNESS))?;
    dirichlet_form(&rule, f, f)
}

/// `deg p · δ(x, v) - |Dp(x)·v| / √(1 - p(x)²)`; the Baran inequality says
/// this is `≥ 0` whenever `sup |p| ≤ 1` on the domain.
pub fn baran_margin(domain: DomainSpec, p: &PolyN, x: &ChartPoint, v: &[f64]) -> Result<f64> {
    if p.n() != domain.n() {
        return Err(Error::Parameter(format!("polynomial in {} variables on {domain}", p.n())));
    }
    let px = p.eval(x.coords());
    if !(px.abs() < 1.0) {
        return Err(Error::Range(format!("|p(x)| = {} is not < 1", px.abs())));
    }
    let delta = baran_length(domain, x, v)?;
    let dp: f64 = p.gradient(x.coords()).iter().zip(v).map(|(a, b)| a * b).sum();
    Ok(p.degree() as f64 * delta - dp.abs() / (1.0 - px * px).sqrt())
}

/// Number of sample points of [`sup_norm_estimate`].
pub const SUP_SAMPLES: usize = 2000;

/// Estimate of `sup |p|` over the closed domain: half boundary and half
/// interior samples, then a local search from the best ones.
pub fn sup_norm_estimate<R: Rng + ?Sized>(domain: DomainSpec, p: &PolyN, rng: &mut R) -> f64 {
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(SUP_SAMPLES + 8);
    if domain.kind() == DomainKind::Simplex {
        let n = domain.n();
        pts.push(vec![0.0; n]);
        for i in 0..n {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            pts.push(e);
        }
    }
    for k in 0..SUP_SAMPLES {
        pts.push(if k % 2 == 0 {
            sampling::boundary_point(rng, domain)
        } else {
            sampling::interior_point(rng, domain, 0.0)
        });
    }
    let mut scored: Vec<(f64, Vec<f64>)> = pts.into_iter().map(|x| (p.eval(&x).abs(), x)).collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut best = scored[0].0;
    for (val, start) in scored.into_iter().take(8) {
        let (mut cur, mut x) = (val, start);
        let mut step = 0.05;
        for _ in 0..300 {
            let g = sampling::gaussian(rng, domain.n());
            let mut y: Vec<f64> = x.iter().zip(&g).map(|(a, b)| a + step * b).collect();
            sampling::clamp_to_closure(domain, &mut y);
            let v = p.eval(&y).abs();
            if v > cur {
                cur = v;
                x = y;
                step *= 1.5;
            } else {
                step *= 0.85;
            }
            if step < 1e-9 {
                break;
            }
        }
        best = best.max(cur);
    }
    best
}

/// Summary of a Baran inequality fuzz run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BaranFuzzReport {
    pub domain: DomainSpec,
    pub samples: usize,
    pub max_degree: usize,
    pub seed: u64,
    pub min_margin: f64,
    pub violations: usize,
    pub tolerance: f64,
}

/// Random polynomial of exact degree `deg` with uniform `[-1, 1]`
/// coefficients on every monomial of degree `≤ deg`.
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, n: usize, deg: usize) -> PolyN {
    let terms = crate::bases::enumerate_indices(n, deg).into_iter().map(|a| {
        let e: Vec<u32> = a.alpha().iter().map(|&k| k as u32).collect();
        let top = a.degree() == deg;
        let mut c: f64 = rng.random_range(-1.0..1.0);
        if top && c.abs() < 0.1 {
            c = 0.1f64.copysign(c);
        }
        (e, c)
    });
    PolyN::from_terms(n, terms).expect("exponents have length n")
}

/// `samples` random polynomials of degree `1..=max_degree`, each normalised
/// by `1.01 ·` its estimated sup norm, evaluated at a random interior point
/// and unit direction. Sample `k` uses the stream `seed`, `k`.
pub fn baran_fuzz(domain: DomainSpec, samples: usize, max_degree: usize, seed: u64, tolerance: f64) -> Result<BaranFuzzReport> {
    if max_degree == 0 {
        return Err(Error::Parameter("max_degree must be at least 1".into()));
    }
    let n = domain.n();
    let margins: Vec<f64> = (0..samples)
        .into_par_iter()
        .map(|k| -> Result<f64> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let deg = rng.random_range(1..=max_degree);
            let raw = random_polynomial(&mut rng, n, deg);
            let sup = sup_norm_estimate(domain, &raw, &mut rng);
            let p = raw.scale(1.0 / (1.01 * sup));
            let (x, v) = loop {
                let x = sampling::interior_point(&mut rng, domain, 1e-6);
                if p.eval(&x).abs() < 1.0 {
                    let v = match domain.kind() {
                        DomainKind::Sphere => sampling::unit_tangent(&mut rng, &x),
                        _ => sampling::unit_vector(&mut rng, n),
                    };
                    break (x, v);
                }
            };
            baran_margin(domain, &p, &ChartPoint::new(domain, x)?, &v)
        })
        .collect::<Result<_>>()?;
    let min_margin = margins.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(BaranFuzzReport {
        domain,
        samples,
        max_degree,
        seed,
        min_margin,
        violations: margins.iter().filter(|&&m| m < -tolerance).count(),
        tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::lb_apply;
    use crate::orthopoly1d::{chebyshev_poly, ChebyshevKind};
    use approx::assert_abs_diff_eq;

    #[test]
    fn basis_projects_to_unit_vector() {
        let d = DomainSpec::ball(2).unwrap();
        let e0 = SpectralExpansion::zero(d, 3).unwrap();
        for (i, b) in e0.basis().iter().enumerate() {
            let e = project(d, |x| b.eval_normalized(x), 3).unwrap();
            for (j, c) in e.coeffs().iter().enumerate() {
                assert_abs_diff_eq!(*c, if i == j { 1.0 } else { 0.0 }, epsilon = 1e-10);
            }
        }
        let x = ChartPoint::new(d, vec![0.1, 0.2]).unwrap();
        assert_eq!(evaluate_expansion(&e0, &x).unwrap(), 0.0);
    }

    #[test]
    fn constants_have_no_sobolev_energy() {
        let d = DomainSpec::simplex(2).unwrap();
        let e = project(d, |_| 2.5, 4).unwrap();
        let s = sobolev_sums(&e);
        assert!(s.s1.abs() <= 1e-20 + 1e-12 && s.s2.abs() <= 1e-12);
    }

    #[test]
    fn single_basis_function_sums() {
        let d = DomainSpec::ball(2).unwrap();
        let b = BasisFunction::new(d, crate::bases::MultiIndex::new(vec![1, 1]).unwrap()).unwrap();
        let e = project(d, |x| b.eval_normalized(x), 3).unwrap();
        let s = sobolev_sums(&e);
        assert_abs_diff_eq!(s.s1, 6.0, epsilon = 1e-9);
        assert_abs_diff_eq!(s.s2, 36.0, epsilon = 1e-8);
    }

    #[test]
    fn s1_is_dirichlet_energy() {
        let d = DomainSpec::ball(2).unwrap();
        let f = PolyN::from_terms(2, [(vec![2, 1], 1.0), (vec![0, 1], -0.5), (vec![1, 0], 0.25)]).unwrap();
        let e = project(d, |x| f.eval(x), 3).unwrap();
        let lf = lb_apply(d, &f).unwrap();
        let rule = domain_rule(d, 6).unwrap();
        let lff = rule.integrate(|x| lf.eval(x) * f.eval(x));
        assert_abs_diff_eq!(sobolev_sums(&e).s1, dirichlet_energy(d, &f).unwrap(), epsilon = 1e-9);
        assert_abs_diff_eq!(lff, dirichlet_energy(d, &f).unwrap(), epsilon = 1e-9);
    }

    #[test]
    fn chebyshev_is_extremal() {
        let d = DomainSpec::ball(1).unwrap();
        for k in 1..=10 {
            let t = chebyshev_poly(ChebyshevKind::First, k).unwrap();
            let p = PolyN::from_terms(1, t.coeffs().iter().enumerate().map(|(i, &c)| (vec![i as u32], c))).unwrap();
            for &x in &[-0.83, -0.3, 0.11, 0.64] {
                let pt = ChartPoint::new(d, vec![x]).unwrap();
                let m = baran_margin(d, &p, &pt, &[1.0]).unwrap();
                assert!(m.abs() <= 1e-9, "k={k} x={x}: {m}");
            }
        }
    }

    #[test]
    fn constant_margin_and_degenerate_point() {
        let d = DomainSpec::ball(2).unwrap();
        let x = ChartPoint::new(d, vec![0.1, 0.2]).unwrap();
        assert_eq!(baran_margin(d, &PolyN::constant(2, 0.3), &x, &[1.0, 0.0]).unwrap(), 0.0);
        assert!(baran_margin(d, &PolyN::constant(2, 1.0), &x, &[1.0, 0.0]).is_err());
    }

    #[test]
    fn small_fuzz_run() {
        let r = baran_fuzz(DomainSpec::ball(2).unwrap(), 50, 6, 1, 1e-9).unwrap();
        assert_eq!(r.violations, 0);
        assert!(r.min_margin >= -1e-9);
        let again = baran_fuzz(DomainSpec::ball(2).unwrap(), 50, 6, 1, 1e-9).unwrap();
        assert_eq!(r, again);
    }
}
