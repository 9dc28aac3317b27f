//! One-dimensional orthogonal polynomials.
//!
//! Chebyshev polynomials of both kinds and monic Jacobi polynomials for the
//! weight `(1-t)^a (1+t)^b` on `[-1, 1]`, all generated by three-term
//! recurrences. Monic Gegenbauer polynomials are the symmetric case
//! `C^s_m = J^{s-1/2, s-1/2}_m`.

use crate::quadrature::gauss_jacobi_rule;
use crate::{Error, Result};

/// Highest degree stored in the monomial basis. Beyond this the monomial
/// coefficients lose too many digits to be useful.
pub const MAX_DEGREE: usize = 24;

/// A real polynomial in the monomial basis, coefficients by ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly1D {
    coeffs: Vec<f64>,
}

impl Poly1D {
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self> {
        while coeffs.len() > 1 && coeffs[coeffs.len() - 1] == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        if coeffs.len() > MAX_DEGREE + 1 {
            return Err(Error::Range(format!(
                "degree {} exceeds the supported maximum {MAX_DEGREE}",
                coeffs.len() - 1
            )));
        }
        Ok(Poly1D { coeffs })
    }

    pub fn constant(c: f64) -> Self {
        Poly1D { coeffs: vec![c] }
    }

    /// The monomial `t`.
    pub fn identity() -> Self {
        Poly1D {
            coeffs: vec![0.0, 1.0],
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading_coefficient(&self) -> f64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    /// Exact coefficientwise derivative.
    pub fn derivative(&self) -> Poly1D {
        if self.coeffs.len() == 1 {
            return Poly1D::constant(0.0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        Poly1D { coeffs }
    }

    pub fn scale(&self, s: f64) -> Poly1D {
        Poly1D {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Poly1D) -> Poly1D {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                self.coeffs.get(k).copied().unwrap_or(0.0)
                    + other.coeffs.get(k).copied().unwrap_or(0.0)
            })
            .collect();
        // Sum of two storable polynomials cannot exceed MAX_DEGREE.
        Poly1D::new(coeffs).expect("degree bounded by operands")
    }

    pub fn mul(&self, other: &Poly1D) -> Result<Poly1D> {
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly1D::new(coeffs)
    }

    /// Largest absolute coefficient difference to `other`.
    pub fn max_coeff_diff(&self, other: &Poly1D) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|k| {
                (self.coeffs.get(k).copied().unwrap_or(0.0)
                    - other.coeffs.get(k).copied().unwrap_or(0.0))
                .abs()
            })
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebyshevKind {
    First,
    Second,
}

/// `T_k(t)` or `U_k(t)` for `|t| <= 1` by the three-term recurrence.
pub fn chebyshev_eval(kind: ChebyshevKind, k: usize, t: f64) -> Result<f64> {
    if !(t.abs() <= 1.0) {
        return Err(Error::Range(format!("chebyshev argument {t} outside [-1, 1]")));
    }
    Ok(chebyshev_unchecked(kind, k, t))
}

/// Recurrence evaluation without the range check; callers guarantee `|t| <= 1`
/// up to rounding.
pub(crate) fn chebyshev_unchecked(kind: ChebyshevKind, k: usize, t: f64) -> f64 {
    let first = match kind {
        ChebyshevKind::First => t,
        ChebyshevKind::Second => 2.0 * t,
    };
    if k == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, first);
    for _ in 1..k {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Monomial coefficients of `T_k` or `U_k`.
pub fn chebyshev_poly(kind: ChebyshevKind, k: usize) -> Result<Poly1D> {
    check_degree(k)?;
    let first = match kind {
        ChebyshevKind::First => vec![0.0, 1.0],
        ChebyshevKind::Second => vec![0.0, 2.0],
    };
    if k == 0 {
        return Ok(Poly1D::constant(1.0));
    }
    let mut prev = vec![1.0];
    let mut cur = first;
    for _ in 1..k {
        let mut next = vec![0.0; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += 2.0 * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    Poly1D::new(cur)
}

/// Exponents of the Jacobi weight `(1-t)^a (1+t)^b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    a: f64,
    b: f64,
}

impl JacobiParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > -1.0 && b > -1.0) {
            return Err(Error::Parameter(format!(
                "Jacobi exponents must exceed -1, got a = {a}, b = {b}"
            )));
        }
        Ok(JacobiParams { a, b })
    }

    /// Symmetric (Gegenbauer) case `a = b`.
    pub fn symmetric(a: f64) -> Result<Self> {
        Self::new(a, a)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Total mass `∫ (1-t)^a (1+t)^b dt = 2^{a+b+1} Γ(a+1)Γ(b+1)/Γ(a+b+2)`.
    pub fn mass(&self) -> f64 {
        use statrs::function::gamma::ln_gamma;
        let (a, b) = (self.a, self.b);
        ((a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0) + ln_gamma(b + 1.0)
            - ln_gamma(a + b + 2.0))
        .exp()
    }

    /// Coefficients `(β_m, γ_m)` of the monic recurrence
    /// `J_{m+1} = (t - β_m) J_m - γ_m J_{m-1}`; `γ_0` is the total mass.
    pub fn recurrence(&self, m: usize) -> (f64, f64) {
        let (a, b) = (self.a, self.b);
        let mf = m as f64;
        let s = 2.0 * mf + a + b;
        let beta = if m == 0 {
            (b - a) / (a + b + 2.0)
        } else {
            (b * b - a * a) / (s * (s + 2.0))
        };
        let gamma = match m {
            0 => self.mass(),
            // the generic formula is 0/0 when a + b = -1
            1 => 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b).powi(2) * (3.0 + a + b)),
            _ => {
                4.0 * mf * (mf + a) * (mf + b) * (mf + a + b)
                    / (s * s * (s + 1.0) * (s - 1.0))
            }
        };
        (beta, gamma)
    }
}

/// Value of the monic Jacobi polynomial `J_m^{a,b}(t)`.
pub fn monic_jacobi_eval(m: usize, p: JacobiParams, t: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let (b0, _) = p.recurrence(0);
    let (mut prev, mut cur) = (1.0, t - b0);
    for k in 1..m {
        let (beta, gamma) = p.recurrence(k);
        let next = (t - beta) * cur - gamma * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Value and derivative of `J_m^{a,b}` at `t`.
pub(crate) fn monic_jacobi_eval_with_derivative(m: usize, p: JacobiParams, t: f64) -> (f64, f64) {
    if m == 0 {
        return (1.0, 0.0);
    }
    let (b0, _) = p.recurrence(0);
    let (mut prev, mut cur) = (1.0, t - b0);
    let (mut dprev, mut dcur) = (0.0, 1.0);
    for k in 1..m {
        let (beta, gamma) = p.recurrence(k);
        let next = (t - beta) * cur - gamma * prev;
        let dnext = cur + (t - beta) * dcur - gamma * dprev;
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    (cur, dcur)
}

/// Monomial coefficients of `J_m^{a,b}` (leading coefficient exactly 1).
pub fn monic_jacobi_poly(m: usize, p: JacobiParams) -> Result<Poly1D> {
    check_degree(m)?;
    if m == 0 {
        return Ok(Poly1D::constant(1.0));
    }
    let (b0, _) = p.recurrence(0);
    let mut prev = vec![1.0];
    let mut cur = vec![-b0, 1.0];
    for k in 1..m {
        let (beta, gamma) = p.recurrence(k);
        let mut next = vec![0.0; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= beta * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= gamma * c;
        }
        prev = cur;
        cur = next;
    }
    Poly1D::new(cur)
}

/// `‖J_m^{a,b}‖²_{a,b} = γ_0 γ_1 ⋯ γ_m`.
pub fn monic_jacobi_norm_sq(m: usize, p: JacobiParams) -> f64 {
    (0..=m).map(|k| p.recurrence(k).1).product()
}

/// Leading coefficient of the classically normalised Jacobi polynomial
/// `P_n^{(a,b)}`, i.e. `(n+a+b+1)_n / (2^n n!)`.
pub fn jacobi_leading_coefficient(n: usize, p: JacobiParams) -> f64 {
    let (a, b) = (p.a, p.b);
    let nf = n as f64;
    (0..n)
        .map(|j| (nf + a + b + 1.0 + j as f64) / (2.0 * (j as f64 + 1.0)))
        .product()
}

/// Classically normalised `P_n^{(a,b)}` (`P_n(1) = (a+1)_n / n!`).
pub fn standard_jacobi_poly(n: usize, p: JacobiParams) -> Result<Poly1D> {
    Ok(monic_jacobi_poly(n, p)?.scale(jacobi_leading_coefficient(n, p)))
}

/// `‖f‖²_{a,b} = ∫ f² (1-t)^a (1+t)^b dt`, by a Gauss–Jacobi rule exact for
/// the degree of `f²`.
pub fn weighted_norm_sq(f: &Poly1D, p: JacobiParams) -> f64 {
    let rule = gauss_jacobi_rule(f.degree() + 1, p).expect("node count is positive");
    rule.nodes()
        .iter()
        .zip(rule.weights())
        .map(|(&t, &w)| {
            let v = f.eval(t);
            w * v * v
        })
        .sum()
}

fn check_degree(m: usize) -> Result<()> {
    if m > MAX_DEGREE {
        return Err(Error::Range(format!(
            "degree {m} exceeds the supported maximum {MAX_DEGREE}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn factorial(n: usize) -> f64 {
        (1..=n).map(|k| k as f64).product()
    }

    #[test]
    fn chebyshev_values() {
        for k in 0..=20 {
            assert_eq!(chebyshev_eval(ChebyshevKind::First, k, 1.0).unwrap(), 1.0);
        }
        assert_abs_diff_eq!(
            chebyshev_eval(ChebyshevKind::First, 2, 0.5).unwrap(),
            -0.5,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            chebyshev_eval(ChebyshevKind::Second, 1, 0.3).unwrap(),
            0.6,
            epsilon = 1e-15
        );
        assert!(chebyshev_eval(ChebyshevKind::First, 3, 1.5).is_err());
        assert!(chebyshev_eval(ChebyshevKind::Second, 3, f64::NAN).is_err());
    }

    #[test]
    fn chebyshev_first_kind_is_bounded() {
        for k in 0..=20 {
            for i in 0..=200 {
                let t = -1.0 + i as f64 / 100.0;
                let v = chebyshev_eval(ChebyshevKind::First, k, t).unwrap();
                assert!(v.abs() <= 1.0 + 1e-13);
            }
        }
    }

    #[test]
    fn recurrence_matches_monomial_expansion() {
        let params = [(-0.5, -0.5), (0.0, 0.0), (0.5, 0.5), (1.0, 2.0), (3.0, -0.5)];
        for &(a, b) in &params {
            let p = JacobiParams::new(a, b).unwrap();
            for m in 0..=20 {
                let poly = monic_jacobi_poly(m, p).unwrap();
                assert_abs_diff_eq!(poly.leading_coefficient(), 1.0, epsilon = 1e-12);
                for i in 0..=20 {
                    let t = -1.0 + i as f64 / 10.0;
                    let direct = monic_jacobi_eval(m, p, t);
                    let expanded = poly.eval(t);
                    let scale = direct.abs().max(1e-3);
                    assert!(
                        (direct - expanded).abs() / scale <= 1e-10,
                        "m={m} a={a} b={b} t={t}: {direct} vs {expanded}"
                    );
                }
            }
        }
        for k in 0..=20 {
            let poly = chebyshev_poly(ChebyshevKind::First, k).unwrap();
            for i in 0..=20 {
                let t = -1.0 + i as f64 / 10.0;
                let d = chebyshev_unchecked(ChebyshevKind::First, k, t);
                assert!((d - poly.eval(t)).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn low_degree_monic_jacobi() {
        let p = JacobiParams::symmetric(1.5).unwrap();
        assert_eq!(monic_jacobi_eval(0, p, 0.3), 1.0);
        assert_abs_diff_eq!(monic_jacobi_eval(1, p, 0.3), 0.3, epsilon = 1e-15);
        // ∫ (J_1^{0,0})² = ∫ t² = 2/3
        let legendre = JacobiParams::new(0.0, 0.0).unwrap();
        let j1 = monic_jacobi_poly(1, legendre).unwrap();
        assert_abs_diff_eq!(weighted_norm_sq(&j1, legendre), 2.0 / 3.0, epsilon = 1e-14);
        // monic Chebyshev: T_m / 2^{m-1}
        let cheb = JacobiParams::symmetric(-0.5).unwrap();
        for m in 1..10 {
            let t = 0.37;
            let expect = chebyshev_unchecked(ChebyshevKind::First, m, t) / 2f64.powi(m as i32 - 1);
            assert_abs_diff_eq!(monic_jacobi_eval(m, cheb, t), expect, epsilon = 1e-14);
        }
    }

    #[test]
    fn orthogonality_over_parameter_grid() {
        let mut exps = vec![-0.5, 0.0, 0.5];
        exps.extend((1..=5).map(|k| k as f64));
        for &a in &exps {
            for &b in &exps {
                let p = JacobiParams::new(a, b).unwrap();
                let rule = gauss_jacobi_rule(12, p).unwrap();
                for i in 0..=10 {
                    for j in 0..i {
                        let ip: f64 = rule
                            .nodes()
                            .iter()
                            .zip(rule.weights())
                            .map(|(&t, &w)| w * monic_jacobi_eval(i, p, t) * monic_jacobi_eval(j, p, t))
                            .sum();
                        let scale = (monic_jacobi_norm_sq(i, p) * monic_jacobi_norm_sq(j, p)).sqrt();
                        assert!(
                            ip.abs() <= 1e-10 * scale.max(1.0),
                            "a={a} b={b} i={i} j={j}: {ip}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_norms_agree_with_quadrature() {
        for &(a, b) in &[(-0.5, -0.5), (0.0, 0.0), (2.0, 0.5), (1.5, -0.5)] {
            let p = JacobiParams::new(a, b).unwrap();
            for m in 0..=10 {
                let poly = monic_jacobi_poly(m, p).unwrap();
                let q = weighted_norm_sq(&poly, p);
                let c = monic_jacobi_norm_sq(m, p);
                assert!((q - c).abs() <= 1e-12 * c.max(1e-300), "a={a} b={b} m={m}");
            }
        }
    }

    #[test]
    fn gegenbauer_norm_identity() {
        // ∫ (J_{s-k}^{k,k})² (1-t²)^k = 2·4^s (s!)² (s+k)! (s-k)! / ((2s+1) ((2s)!)²)
        for s in 0..=6usize {
            for k in 0..=s {
                let p = JacobiParams::symmetric(k as f64).unwrap();
                let poly = monic_jacobi_poly(s - k, p).unwrap();
                let quad = weighted_norm_sq(&poly, p);
                let closed = 2.0 * 4f64.powi(s as i32) * factorial(s).powi(2) * factorial(s + k) * factorial(s - k)
                    / ((2 * s + 1) as f64 * factorial(2 * s).powi(2));
                assert!((quad - closed).abs() <= 1e-12 * closed, "s={s} k={k}");
            }
        }
    }

    #[test]
    fn chebyshev_weighted_norms() {
        let first = JacobiParams::symmetric(-0.5).unwrap();
        let second = JacobiParams::symmetric(0.5).unwrap();
        assert_abs_diff_eq!(weighted_norm_sq(&Poly1D::constant(1.0), first), PI, epsilon = 1e-13);
        for k in 1..=12 {
            let t = chebyshev_poly(ChebyshevKind::First, k).unwrap();
            assert_abs_diff_eq!(weighted_norm_sq(&t, first), PI / 2.0, epsilon = 1e-11);
            let u = chebyshev_poly(ChebyshevKind::Second, k).unwrap();
            assert_abs_diff_eq!(weighted_norm_sq(&u, second), PI / 2.0, epsilon = 1e-11);
        }
    }

    #[test]
    fn derivatives() {
        let sq = Poly1D::new(vec![0.0, 0.0, 1.0]).unwrap();
        assert_eq!(sq.derivative(), Poly1D::new(vec![0.0, 2.0]).unwrap());
        // T_k' = k U_{k-1}
        for k in 1..=20 {
            let dt = chebyshev_poly(ChebyshevKind::First, k).unwrap().derivative();
            let u = chebyshev_poly(ChebyshevKind::Second, k - 1).unwrap().scale(k as f64);
            let scale = u.coeffs().iter().fold(1.0f64, |m, c| m.max(c.abs()));
            assert!(dt.max_coeff_diff(&u) <= 1e-12 * scale, "k={k}");
        }
    }

    #[test]
    fn jacobi_derivative_identity() {
        for s in 1..=8usize {
            for k in 0..s {
                let pk = JacobiParams::symmetric(k as f64).unwrap();
                let pk1 = JacobiParams::symmetric(k as f64 + 1.0).unwrap();
                // monic: d/dt J_{s-k} = (s-k) J_{s-k-1}
                let d = monic_jacobi_poly(s - k, pk).unwrap().derivative();
                let rhs = monic_jacobi_poly(s - k - 1, pk1).unwrap().scale((s - k) as f64);
                assert!(d.max_coeff_diff(&rhs) <= 1e-10, "monic s={s} k={k}");
                // classical normalisation: d/dt P_{s-k}^{(k,k)} = ((s+k+1)/2) P_{s-k-1}^{(k+1,k+1)}
                let d = standard_jacobi_poly(s - k, pk).unwrap().derivative();
                let rhs = standard_jacobi_poly(s - k - 1, pk1)
                    .unwrap()
                    .scale((s + k + 1) as f64 / 2.0);
                let scale = rhs.coeffs().iter().fold(1.0f64, |m, c| m.max(c.abs()));
                assert!(d.max_coeff_diff(&rhs) <= 1e-10 * scale, "standard s={s} k={k}");
            }
        }
        // the example s = 3, k = 1
        let d = monic_jacobi_poly(2, JacobiParams::symmetric(1.0).unwrap())
            .unwrap()
            .derivative();
        let rhs = monic_jacobi_poly(1, JacobiParams::symmetric(2.0).unwrap())
            .unwrap()
            .scale(2.0);
        assert!(d.max_coeff_diff(&rhs) <= 1e-14);
    }

    #[test]
    fn degree_limit_is_enforced() {
        let p = JacobiParams::symmetric(0.0).unwrap();
        assert!(monic_jacobi_poly(MAX_DEGREE, p).is_ok());
        assert!(monic_jacobi_poly(MAX_DEGREE + 1, p).is_err());
        assert!(Poly1D::new(vec![1.0; MAX_DEGREE + 2]).is_err());
        assert!(JacobiParams::new(-1.0, 0.0).is_err());
    }
}
