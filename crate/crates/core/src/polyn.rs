//! Sparse polynomials in `n` real variables.

use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients with modulus at or below this are dropped.
pub const PRUNE_TOL: f64 = 1e-14;

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

/// Polynomial stored as a map from exponent vectors to coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyN {
    n: usize,
    coeffs: BTreeMap<Exponent, f64>,
}

impl PolyN {
    pub fn zero(n: usize) -> Self {
        PolyN {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: f64) -> Self {
        Self::monomial(n, vec![0; n], c)
    }

    /// `c · x^e`.
    pub fn monomial(n: usize, e: Exponent, c: f64) -> Self {
        assert_eq!(e.len(), n, "exponent length must equal the dimension");
        let mut p = Self::zero(n);
        if c.abs() > PRUNE_TOL {
            p.coeffs.insert(e, c);
        }
        p
    }

    /// The coordinate function `x_i` (0-based).
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(n, e, 1.0)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, f64)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::Parameter(format!(
                    "exponent {e:?} has length {}, expected {n}",
                    e.len()
                )));
            }
            *p.coeffs.entry(e).or_insert(0.0) += c;
        }
        p.prune();
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.coeffs
            .keys()
            .map(|e| e.iter().sum::<u32>() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, f64)> {
        self.coeffs.iter().map(|(e, c)| (e, *c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> f64 {
        self.coeffs.get(e).copied().unwrap_or(0.0)
    }

    fn prune(&mut self) {
        self.coeffs.retain(|_, c| c.abs() > PRUNE_TOL);
    }

    fn check_dim(&self, other: &PolyN) {
        assert_eq!(self.n, other.n, "polynomials live in different dimensions");
    }

    pub fn scale(&self, s: f64) -> PolyN {
        let mut p = PolyN {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        };
        p.prune();
        p
    }

    /// Partial derivative in `x_i` (0-based).
    pub fn derivative(&self, i: usize) -> PolyN {
        let mut out = PolyN::zero(self.n);
        for (e, c) in &self.coeffs {
            if e[i] > 0 {
                let mut d = e.clone();
                d[i] -= 1;
                *out.coeffs.entry(d).or_insert(0.0) += c * e[i] as f64;
            }
        }
        out.prune();
        out
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.n);
        self.coeffs
            .iter()
            .map(|(e, c)| {
                c * e
                    .iter()
                    .zip(x)
                    .map(|(&k, &v)| v.powi(k as i32))
                    .product::<f64>()
            })
            .sum()
    }

    /// `∇p(x)`.
    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| self.derivative(i).eval(x)).collect()
    }

    /// Largest coefficient difference over the union of supports.
    pub fn max_coeff_diff(&self, other: &PolyN) -> f64 {
        self.sub(other).coeffs.values().fold(0.0, |a, c| a.max(c.abs()))
    }

    /// Largest coefficient modulus.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.values().fold(0.0, |a, c| a.max(c.abs()))
    }

    pub fn add(&self, other: &PolyN) -> PolyN {
        self.check_dim(other);
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            *out.coeffs.entry(e.clone()).or_insert(0.0) += c;
        }
        out.prune();
        out
    }

    pub fn sub(&self, other: &PolyN) -> PolyN {
        self.check_dim(other);
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            *out.coeffs.entry(e.clone()).or_insert(0.0) -= c;
        }
        out.prune();
        out
    }

    pub fn mul(&self, other: &PolyN) -> PolyN {
        self.check_dim(other);
        let mut out = PolyN::zero(self.n);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *out.coeffs.entry(e).or_insert(0.0) += ca * cb;
            }
        }
        out.prune();
        out
    }

    /// Applies `f(exponent, coefficient) -> [(exponent, coefficient)]` to
    /// every term and sums the results.
    pub fn map_terms<F, I>(&self, f: F) -> PolyN
    where
        F: Fn(&[u32], f64) -> I,
        I: IntoIterator<Item = (Exponent, f64)>,
    {
        let mut out = PolyN::zero(self.n);
        for (e, c) in &self.coeffs {
            for (d, v) in f(e, *c) {
                *out.coeffs.entry(d).or_insert(0.0) += v;
            }
        }
        out.prune();
        out
    }
}

impl Add for &PolyN {
    type Output = PolyN;
    fn add(self, rhs: &PolyN) -> PolyN {
        PolyN::add(self, rhs)
    }
}

impl Sub for &PolyN {
    type Output = PolyN;
    fn sub(self, rhs: &PolyN) -> PolyN {
        PolyN::sub(self, rhs)
    }
}

impl Mul for &PolyN {
    type Output = PolyN;
    fn mul(self, rhs: &PolyN) -> PolyN {
        PolyN::mul(self, rhs)
    }
}

impl Mul<f64> for &PolyN {
    type Output = PolyN;
    fn mul(self, rhs: f64) -> PolyN {
        self.scale(rhs)
    }
}

impl Neg for &PolyN {
    type Output = PolyN;
    fn neg(self) -> PolyN {
        self.scale(-1.0)
    }
}

impl fmt::Display for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(if *c < 0.0 { " - " } else { " + " })?;
            } else if *c < 0.0 {
                f.write_str("-")?;
            }
            write!(f, "{}", c.abs())?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{p}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn arithmetic_and_degree() {
        let x = PolyN::variable(2, 0);
        let y = PolyN::variable(2, 1);
        let p = &(&x * &x) - &(&y * 3.0);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coeff(&[2, 0]), 1.0);
        assert_eq!(p.coeff(&[0, 1]), -3.0);
        assert_abs_diff_eq!(p.eval(&[2.0, 1.0]), 1.0);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.degree(), 0);
    }

    #[test]
    fn derivative_of_square() {
        let t = PolyN::variable(1, 0);
        let d = (&t * &t).derivative(0);
        assert_eq!(d, t.scale(2.0));
        assert!(PolyN::constant(3, 2.0).derivative(1).is_zero());
    }

    #[test]
    fn pruning() {
        let p = PolyN::from_terms(1, [(vec![1], 1e-15), (vec![0], 1.0)]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(PolyN::from_terms(2, [(vec![1], 1.0)]).is_err());
    }

    #[test]
    fn gradient_matches_derivatives() {
        let x = PolyN::variable(3, 0);
        let z = PolyN::variable(3, 2);
        let p = &(&x * &z) + &PolyN::constant(3, 1.0);
        assert_eq!(p.gradient(&[2.0, 5.0, 3.0]), vec![3.0, 0.0, 2.0]);
        assert_eq!(format!("{p}"), "1*x1*x3 + 1");
    }
}
