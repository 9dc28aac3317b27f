//! Orthogonal polynomial bases of the equilibrium measures.
//!
//! Ball: with `r_j² = 1 - Σ_{k<j} x_k²` and `λ_j = (n-j)/2 + Σ_{k>j} α_k`,
//!
//! `φ_α(x) = Π_{j<n} r_j^{α_j} C_{α_j}^{λ_j}(x_j/r_j) · r_n^{α_n} T_{α_n}(x_n/r_n)`,
//!
//! where `C^λ = J^{λ-1/2, λ-1/2}` is the monic Gegenbauer polynomial and `T`
//! the Chebyshev polynomial of the first kind.
//!
//! Simplex: with `R_j = 1 - Σ_{k<j} x_k` and
//! `a_j = 2 Σ_{k>j} α_k + (n-j-1)/2`,
//!
//! `ψ_α(x) = Π_j R_j^{α_j} J_{α_j}^{a_j, -1/2}(2x_j/R_j - 1)`.
//!
//! Sphere: real spherical harmonics on `𝕊¹` and `𝕊²`, zonal harmonics for
//! any `n`.
//!
//! Each factor `r^m P(x/r)` is evaluated through the homogenised three-term
//! recurrence, so no square roots or divisions by `r` occur and the same
//! recurrence run on [`PolyN`] gives the exact monomial expansion.

use crate::geometry::{ChartPoint, DomainKind, DomainSpec};
use crate::orthopoly1d::{monic_jacobi_eval, monic_jacobi_norm_sq, JacobiParams};
use crate::polyn::PolyN;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;

/// Largest total degree of a basis function.
pub const MAX_BASIS_DEGREE: usize = 12;

/// Multi-index `α ∈ ℕⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex {
    alpha: Vec<usize>,
}

impl MultiIndex {
    pub fn new(alpha: Vec<usize>) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::Parameter("multi-index must have length >= 1".into()));
        }
        Ok(MultiIndex { alpha })
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex { alpha: vec![0; n] }
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// `s = |α|`.
    pub fn degree(&self) -> usize {
        self.alpha.iter().sum()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.alpha.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

fn compositions(n: usize, s: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
    if prefix.len() + 1 == n {
        prefix.push(s);
        out.push(MultiIndex { alpha: prefix.clone() });
        prefix.pop();
        return;
    }
    for first in (0..=s).rev() {
        prefix.push(first);
        compositions(n, s - first, prefix, out);
        prefix.pop();
    }
}

/// All `α` with `|α| ≤ max_degree`, by degree and then lexicographically
/// decreasing (`(1,0)` before `(0,1)`). There are `binom(n + D, n)` of them.
pub fn enumerate_indices(n: usize, max_degree: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for s in 0..=max_degree {
        compositions(n, s, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Label of a basis function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisKey {
    /// `φ_α` (ball) or `ψ_α` (simplex).
    Multi(MultiIndex),
    /// Real spherical harmonic of degree `l`; `m > 0` is the cosine and
    /// `m < 0` the sine part of order `|m|`.
    Harmonic { l: usize, m: i64 },
}

impl BasisKey {
    pub fn degree(&self) -> usize {
        match self {
            BasisKey::Multi(a) => a.degree(),
            BasisKey::Harmonic { l, .. } => *l,
        }
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKey::Multi(a) => write!(f, "{a}"),
            BasisKey::Harmonic { l, m } => write!(f, "Y[{l},{m}]"),
        }
    }
}

/// An orthogonal basis polynomial with its squared norm and eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisFunction {
    domain: DomainSpec,
    key: BasisKey,
    norm_sq: f64,
    eigenvalue: f64,
}

impl BasisFunction {
    /// `φ_α` on `B^n` or `ψ_α` on `S^n`, `n = α.len()`.
    pub fn new(domain: DomainSpec, alpha: MultiIndex) -> Result<Self> {
        if alpha.n() != domain.n() {
            return Err(Error::Parameter(format!(
                "multi-index {alpha} has length {}, expected {}",
                alpha.n(),
                domain.n()
            )));
        }
        check_basis_degree(alpha.degree())?;
        let norm_sq = match domain.kind() {
            DomainKind::Ball => ball_basis_norm_sq(&alpha),
            DomainKind::Simplex => simplex_basis_norm_sq(&alpha),
            DomainKind::Sphere => {
                return Err(Error::Parameter(
                    "sphere bases are labelled by (l, m); use BasisFunction::harmonic".into(),
                ))
            }
        };
        Ok(BasisFunction {
            domain,
            eigenvalue: eigenvalue(domain, alpha.degree()),
            key: BasisKey::Multi(alpha),
            norm_sq,
        })
    }

    /// Real harmonic `Y_l^m` on `𝕊¹` (`n = 2`, `|m| = l`) or `𝕊²` (`n = 3`,
    /// `|m| ≤ l`).
    pub fn harmonic(domain: DomainSpec, l: usize, m: i64) -> Result<Self> {
        if domain.kind() != DomainKind::Sphere {
            return Err(Error::Parameter(format!("{domain} has no spherical harmonics")));
        }
        check_basis_degree(l)?;
        let am = m.unsigned_abs() as usize;
        let norm_sq = match domain.n() {
            2 => {
                if am != l {
                    return Err(Error::Parameter(format!("circle harmonics need |m| = l, got l = {l}, m = {m}")));
                }
                if l == 0 {
                    1.0
                } else {
                    0.5
                }
            }
            3 => {
                if am > l {
                    return Err(Error::Parameter(format!("|m| > l for l = {l}, m = {m}")));
                }
                let ratio: f64 = ((l - am + 1)..=(l + am)).map(|k| k as f64).product();
                let factor = if am == 0 { 1.0 } else { 0.5 };
                ratio / (2 * l + 1) as f64 * factor
            }
            n => {
                return Err(Error::Parameter(format!(
                    "full harmonic bases are provided for n = 2, 3 only (got n = {n}); use zonal_harmonic_eval"
                )))
            }
        };
        Ok(BasisFunction {
            domain,
            key: BasisKey::Harmonic { l, m },
            norm_sq,
            eigenvalue: eigenvalue(domain, l),
        })
    }

    pub fn domain(&self) -> DomainSpec {
        self.domain
    }

    pub fn key(&self) -> &BasisKey {
        &self.key
    }

    pub fn degree(&self) -> usize {
        self.key.degree()
    }

    /// Squared `L²` norm against the equilibrium measure.
    pub fn norm_sq(&self) -> f64 {
        self.norm_sq
    }

    /// Eigenvalue of `L = -Δ`.
    pub fn eigenvalue(&self) -> f64 {
        self.eigenvalue
    }

    /// Value at raw coordinates (the formula is polynomial, so any point of
    /// `ℝⁿ` is accepted).
    pub fn eval(&self, x: &[f64]) -> f64 {
        match (&self.key, self.domain.kind()) {
            (BasisKey::Multi(a), DomainKind::Ball) => ball_factors::<f64>(a, x),
            (BasisKey::Multi(a), _) => simplex_factors::<f64>(a, x),
            (BasisKey::Harmonic { l, m }, _) => harmonic_value(self.domain.n(), *l, *m, x),
        }
    }

    /// Value at a validated point of the basis domain.
    pub fn eval_at(&self, x: &ChartPoint) -> Result<f64> {
        if x.domain() != self.domain {
            return Err(Error::Parameter(format!("point belongs to {}, not {}", x.domain(), self.domain)));
        }
        Ok(self.eval(x.coords()))
    }

    /// `b / ‖b‖`.
    pub fn eval_normalized(&self, x: &[f64]) -> f64 {
        self.eval(x) / self.norm_sq.sqrt()
    }

    /// Monomial expansion.
    pub fn polynomial(&self) -> PolyN {
        let n = self.domain.n();
        let vars: Vec<PolyN> = (0..n).map(|i| PolyN::variable(n, i)).collect();
        match (&self.key, self.domain.kind()) {
            (BasisKey::Multi(a), DomainKind::Ball) => ball_factors::<PolyN>(a, &vars),
            (BasisKey::Multi(a), _) => simplex_factors::<PolyN>(a, &vars),
            (BasisKey::Harmonic { l, m }, _) => harmonic_poly(n, *l, *m),
        }
    }
}

fn check_basis_degree(s: usize) -> Result<()> {
    if s > MAX_BASIS_DEGREE {
        return Err(Error::Range(format!(
            "degree {s} exceeds the supported maximum {MAX_BASIS_DEGREE}"
        )));
    }
    Ok(())
}

/// Ring operations shared by `f64` and [`PolyN`] so that one recurrence
/// gives both values and expansions.
trait Ring: Clone {
    fn one_like(x: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, s: f64) -> Self;
}

impl Ring for f64 {
    fn one_like(_: &Self) -> Self {
        1.0
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, s: f64) -> Self {
        self * s
    }
}

impl Ring for PolyN {
    fn one_like(x: &Self) -> Self {
        PolyN::constant(x.n(), 1.0)
    }
    fn sub(&self, o: &Self) -> Self {
        PolyN::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        PolyN::mul(self, o)
    }
    fn scale(&self, s: f64) -> Self {
        PolyN::scale(self, s)
    }
}

/// `r^m J_m(y/r)` for the monic Jacobi polynomial of `p`, given `y` and `r²`
/// (`p` symmetric, so only `r²` enters).
fn homogeneous_gegenbauer<T: Ring>(m: usize, p: JacobiParams, y: &T, r2: &T) -> T {
    let one = T::one_like(y);
    if m == 0 {
        return one;
    }
    let (mut prev, mut cur) = (one, y.clone());
    for k in 1..m {
        let (_, gamma) = p.recurrence(k);
        let next = y.mul(&cur).sub(&r2.mul(&prev).scale(gamma));
        prev = cur;
        cur = next;
    }
    cur
}

/// `r^m T_m(y/r)`.
fn homogeneous_chebyshev<T: Ring>(m: usize, y: &T, r2: &T) -> T {
    let one = T::one_like(y);
    if m == 0 {
        return one;
    }
    let (mut prev, mut cur) = (one, y.clone());
    for _ in 1..m {
        let next = y.mul(&cur).scale(2.0).sub(&r2.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `R^m J_m^{a,b}(2y/R - 1)`.
fn homogeneous_shifted_jacobi<T: Ring>(m: usize, p: JacobiParams, y: &T, big_r: &T) -> T {
    let one = T::one_like(y);
    if m == 0 {
        return one;
    }
    let t = y.scale(2.0).sub(big_r);
    let r2 = big_r.mul(big_r);
    let (b0, _) = p.recurrence(0);
    let (mut prev, mut cur) = (one, t.sub(&big_r.scale(b0)));
    for k in 1..m {
        let (beta, gamma) = p.recurrence(k);
        let next = t.sub(&big_r.scale(beta)).mul(&cur).sub(&r2.mul(&prev).scale(gamma));
        prev = cur;
        cur = next;
    }
    cur
}

/// `λ_j = (n-j)/2 + Σ_{k>j} α_k` (1-based `j`).
pub fn ball_lambda(alpha: &MultiIndex, j: usize) -> f64 {
    let n = alpha.n();
    (n - j) as f64 / 2.0 + alpha.alpha()[j..].iter().sum::<usize>() as f64
}

/// `a_j = 2 Σ_{k>j} α_k + (n-j-1)/2` (1-based `j`).
pub fn simplex_parameter(alpha: &MultiIndex, j: usize) -> f64 {
    let n = alpha.n();
    2.0 * alpha.alpha()[j..].iter().sum::<usize>() as f64 + (n as f64 - j as f64 - 1.0) / 2.0
}

fn ball_factors<T: Ring>(alpha: &MultiIndex, x: &[T]) -> T {
    let n = alpha.n();
    let mut r2 = T::one_like(&x[0]);
    let mut out = T::one_like(&x[0]);
    for j in 1..=n {
        let m = alpha.alpha()[j - 1];
        let xj = &x[j - 1];
        let f = if j < n {
            let lam = ball_lambda(alpha, j);
            let p = JacobiParams::symmetric(lam - 0.5).expect("λ_j >= 1/2");
            homogeneous_gegenbauer(m, p, xj, &r2)
        } else {
            homogeneous_chebyshev(m, xj, &r2)
        };
        out = out.mul(&f);
        r2 = r2.sub(&xj.mul(xj));
    }
    out
}

fn simplex_factors<T: Ring>(alpha: &MultiIndex, x: &[T]) -> T {
    let n = alpha.n();
    let mut big_r = T::one_like(&x[0]);
    let mut out = T::one_like(&x[0]);
    for j in 1..=n {
        let m = alpha.alpha()[j - 1];
        let p = JacobiParams::new(simplex_parameter(alpha, j), -0.5).expect("a_j >= -1/2");
        out = out.mul(&homogeneous_shifted_jacobi(m, p, &x[j - 1], &big_r));
        big_r = big_r.sub(&x[j - 1]);
    }
    out
}

/// `φ_α(x)` at an interior ball point.
pub fn ball_basis_eval(alpha: &MultiIndex, x: &ChartPoint) -> Result<f64> {
    BasisFunction::new(x.domain(), alpha.clone())
        .and_then(|b| if x.domain().kind() == DomainKind::Ball { b.eval_at(x) } else {
            Err(Error::Parameter(format!("{} is not a ball", x.domain())))
        })
}

/// `ψ_α(x)` at an interior simplex point.
pub fn simplex_basis_eval(alpha: &MultiIndex, x: &ChartPoint) -> Result<f64> {
    BasisFunction::new(x.domain(), alpha.clone())
        .and_then(|b| if x.domain().kind() == DomainKind::Simplex { b.eval_at(x) } else {
            Err(Error::Parameter(format!("{} is not a simplex", x.domain())))
        })
}

/// `‖φ_α‖² = Π_{j<n} ‖C_{α_j}^{λ_j}‖²_{λ_j-1/2, λ_j-1/2} · ‖T_{α_n}‖²_{-1/2,-1/2}`.
pub fn ball_basis_norm_sq(alpha: &MultiIndex) -> f64 {
    let n = alpha.n();
    let mut out = if alpha.alpha()[n - 1] == 0 { PI } else { PI / 2.0 };
    for j in 1..n {
        let lam = ball_lambda(alpha, j);
        let p = JacobiParams::symmetric(lam - 0.5).expect("λ_j >= 1/2");
        out *= monic_jacobi_norm_sq(alpha.alpha()[j - 1], p);
    }
    out
}

/// `‖ψ_α‖² = Π_j 2^{-(a_j + 1/2)} ‖J_{α_j}^{a_j,-1/2}‖²_{a_j,-1/2}`.
pub fn simplex_basis_norm_sq(alpha: &MultiIndex) -> f64 {
    (1..=alpha.n())
        .map(|j| {
            let a = simplex_parameter(alpha, j);
            let p = JacobiParams::new(a, -0.5).expect("a_j >= -1/2");
            2f64.powf(-(a + 0.5)) * monic_jacobi_norm_sq(alpha.alpha()[j - 1], p)
        })
        .product()
}

/// Eigenvalue of `L = -Δ` on the degree-`s` eigenspace: `s(s+n-1)` (ball),
/// `s(s+(n-1)/2)` (simplex), `s(s+n-2)` (sphere `𝕊^{n-1}`).
pub fn eigenvalue(domain: DomainSpec, s: usize) -> f64 {
    let (s, n) = (s as f64, domain.n() as f64);
    match domain.kind() {
        DomainKind::Ball => s * (s + n - 1.0),
        DomainKind::Simplex => s * (s + (n - 1.0) / 2.0),
        DomainKind::Sphere => s * (s + n - 2.0),
    }
}

/// `d^m/dz^m P_l(z)` as monomial coefficients (ascending).
fn legendre_derivative_coeffs(l: usize, m: usize) -> Vec<f64> {
    // P_l by Bonnet's recurrence on coefficient vectors
    let mut prev = vec![1.0];
    let mut cur = vec![0.0, 1.0];
    let p = if l == 0 {
        prev
    } else {
        for k in 1..l {
            let kf = k as f64;
            let mut next = vec![0.0; k + 2];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] += (2.0 * kf + 1.0) * c / (kf + 1.0);
            }
            for (i, c) in prev.iter().enumerate() {
                next[i] -= kf * c / (kf + 1.0);
            }
            prev = cur;
            cur = next;
        }
        cur
    };
    let mut d = p;
    for _ in 0..m {
        d = d.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
        if d.is_empty() {
            d.push(0.0);
        }
    }
    d
}

/// Real and imaginary parts of `(x + iy)^m`.
fn complex_power(x: f64, y: f64, m: usize) -> (f64, f64) {
    let (mut re, mut im) = (1.0, 0.0);
    for _ in 0..m {
        (re, im) = (re * x - im * y, re * y + im * x);
    }
    (re, im)
}

fn harmonic_value(n: usize, l: usize, m: i64, x: &[f64]) -> f64 {
    let am = m.unsigned_abs() as usize;
    let (re, im) = complex_power(x[0], x[1], am);
    let trig = if m >= 0 { re } else { im };
    if n == 2 {
        return trig;
    }
    let q = legendre_derivative_coeffs(l, am);
    let z = x[2];
    q.iter().rev().fold(0.0, |acc, c| acc * z + c) * trig
}

fn harmonic_poly(n: usize, l: usize, m: i64) -> PolyN {
    let am = m.unsigned_abs() as usize;
    let x = PolyN::variable(n, 0);
    let y = PolyN::variable(n, 1);
    let (mut re, mut im) = (PolyN::constant(n, 1.0), PolyN::zero(n));
    for _ in 0..am {
        (re, im) = (&(&re * &x) - &(&im * &y), &(&re * &y) + &(&im * &x));
    }
    let trig = if m >= 0 { re } else { im };
    if n == 2 {
        return trig;
    }
    let q = legendre_derivative_coeffs(l, am);
    let terms = q.iter().enumerate().map(|(k, &c)| {
        let mut e = vec![0; n];
        e[2] = k as u32;
        (e, c)
    });
    let qz = PolyN::from_terms(n, terms).expect("length n");
    &qz * &trig
}

/// Real spherical harmonic `Y_l^m` on `𝕊²` (unnormalised:
/// `(1-z²)^{|m|/2} P_l^{(|m|)}(z)` times `cos(|m|φ)` for `m ≥ 0` or
/// `sin(|m|φ)` for `m < 0`).
pub fn spherical_harmonic_eval(l: usize, m: i64, x: &ChartPoint) -> Result<f64> {
    let d = x.domain();
    if d.kind() != DomainKind::Sphere || d.n() != 3 {
        return Err(Error::Parameter(format!("spherical harmonics need a point of 𝕊², got {d}")));
    }
    BasisFunction::harmonic(d, l, m)?.eval_at(x)
}

/// Zonal harmonic of degree `l` on `𝕊^{n-1}` as a function of `t = ⟨x, pole⟩`:
/// the monic Gegenbauer polynomial `C_l^{(n-2)/2}(t)`.
pub fn zonal_harmonic_eval(n: usize, l: usize, t: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Parameter("zonal harmonics need n >= 2".into()));
    }
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::Range(format!("cosine {t} is not in [-1, 1]")));
    }
    let a = (n as f64 - 3.0) / 2.0;
    Ok(monic_jacobi_eval(l, JacobiParams::symmetric(a)?, t))
}

/// Every basis function of degree `≤ max_degree`, in the order of
/// [`enumerate_indices`] (by `(l, m)` with `m` descending for spheres).
pub fn basis_functions(domain: DomainSpec, max_degree: usize) -> Result<Vec<BasisFunction>> {
    check_basis_degree(max_degree)?;
    match domain.kind() {
        DomainKind::Sphere => {
            let mut out = Vec::new();
            for l in 0..=max_degree {
                let li = l as i64;
                match domain.n() {
                    2 => {
                        out.push(BasisFunction::harmonic(domain, l, li)?);
                        if l > 0 {
                            out.push(BasisFunction::harmonic(domain, l, -li)?);
                        }
                    }
                    _ => {
                        for m in (-li..=li).rev() {
                            out.push(BasisFunction::harmonic(domain, l, m)?);
                        }
                    }
                }
            }
            Ok(out)
        }
        _ => enumerate_indices(domain.n(), max_degree)
            .into_iter()
            .map(|a| BasisFunction::new(domain, a))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn binom(n: usize, k: usize) -> usize {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn index_counts_and_order() {
        assert_eq!(enumerate_indices(2, 0), vec![MultiIndex::zero(2)]);
        assert_eq!(enumerate_indices(2, 3).len(), 10);
        assert_eq!(enumerate_indices(3, 2).len(), 10);
        for n in 1..=4 {
            for d in 0..=6 {
                assert_eq!(enumerate_indices(n, d).len(), binom(n + d, n));
            }
        }
        let idx = enumerate_indices(2, 1);
        assert_eq!(idx[1].alpha(), &[1, 0]);
        assert_eq!(idx[2].alpha(), &[0, 1]);
    }

    #[test]
    fn constants_and_degree_one() {
        let d = DomainSpec::ball(2).unwrap();
        let p = ChartPoint::new(d, vec![0.3, -0.4]).unwrap();
        let one = MultiIndex::zero(2);
        assert_eq!(ball_basis_eval(&one, &p).unwrap(), 1.0);
        let x = MultiIndex::new(vec![1, 0]).unwrap();
        let y = MultiIndex::new(vec![0, 1]).unwrap();
        assert_abs_diff_eq!(ball_basis_eval(&x, &p).unwrap(), 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(ball_basis_eval(&y, &p).unwrap(), -0.4, epsilon = 1e-15);
        let s = DomainSpec::simplex(2).unwrap();
        let q = ChartPoint::new(s, vec![0.2, 0.3]).unwrap();
        assert_eq!(simplex_basis_eval(&one, &q).unwrap(), 1.0);
    }

    #[test]
    fn simplex_one_dimensional_is_shifted_chebyshev() {
        let s = DomainSpec::simplex(1).unwrap();
        for m in 0..=8 {
            let b = BasisFunction::new(s, MultiIndex::new(vec![m]).unwrap()).unwrap();
            for &x in &[0.05, 0.3, 0.5, 0.9] {
                let t = 2.0 * x - 1.0;
                let t_m = crate::orthopoly1d::chebyshev_eval(crate::orthopoly1d::ChebyshevKind::First, m, t).unwrap();
                let monic = if m == 0 { t_m } else { t_m / 2f64.powi(m as i32 - 1) };
                assert_abs_diff_eq!(b.eval(&[x]), monic, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn polynomial_matches_evaluation() {
        for d in [DomainSpec::ball(3).unwrap(), DomainSpec::simplex(3).unwrap()] {
            for b in basis_functions(d, 5).unwrap() {
                let p = b.polynomial();
                assert_eq!(p.degree(), b.degree());
                for x in [[0.1, 0.2, 0.3], [0.25, 0.05, 0.4], [-0.3, 0.5, 0.1]] {
                    assert_abs_diff_eq!(p.eval(&x), b.eval(&x), epsilon = 1e-12);
                }
            }
        }
        let sp = DomainSpec::sphere(3).unwrap();
        for b in basis_functions(sp, 4).unwrap() {
            let p = b.polynomial();
            let x = [0.48, -0.6, 0.64];
            assert_abs_diff_eq!(p.eval(&x), b.eval(&x), epsilon = 1e-12);
        }
    }

    #[test]
    fn eigenvalues() {
        for d in [
            DomainSpec::ball(2).unwrap(),
            DomainSpec::simplex(2).unwrap(),
            DomainSpec::sphere(3).unwrap(),
        ] {
            assert_eq!(eigenvalue(d, 0), 0.0);
        }
        assert_eq!(eigenvalue(DomainSpec::ball(2).unwrap(), 3), 12.0);
        assert_eq!(eigenvalue(DomainSpec::simplex(2).unwrap(), 1), 1.5);
        assert_eq!(eigenvalue(DomainSpec::sphere(3).unwrap(), 2), 6.0);
    }

    #[test]
    fn ball_norm_examples() {
        assert_abs_diff_eq!(ball_basis_norm_sq(&MultiIndex::zero(2)), 2.0 * PI, epsilon = 1e-13);
        let y = MultiIndex::new(vec![0, 1]).unwrap();
        assert_abs_diff_eq!(ball_basis_norm_sq(&y), 2.0 * PI / 3.0, epsilon = 1e-13);
        for a in enumerate_indices(3, 8) {
            assert!(ball_basis_norm_sq(&a) > 0.0);
        }
    }

    #[test]
    fn harmonic_labels() {
        let sp = DomainSpec::sphere(3).unwrap();
        let x = ChartPoint::new(sp, vec![0.0, 0.6, 0.8]).unwrap();
        assert_eq!(spherical_harmonic_eval(0, 0, &x).unwrap(), 1.0);
        assert!(spherical_harmonic_eval(1, 2, &x).is_err());
        assert_abs_diff_eq!(spherical_harmonic_eval(1, 0, &x).unwrap(), 0.8);
        assert_abs_diff_eq!(spherical_harmonic_eval(1, -1, &x).unwrap(), 0.6);
        assert_eq!(zonal_harmonic_eval(3, 1, 0.5).unwrap(), 0.5);
        assert!(zonal_harmonic_eval(3, 1, 1.5).is_err());
        assert!(BasisFunction::harmonic(DomainSpec::sphere(2).unwrap(), 2, 1).is_err());
    }
}
