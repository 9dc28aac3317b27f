//! Equilibrium volume of boundary collars of the ball.

use crate::orthopoly1d::JacobiParams;
use crate::quadrature::{gauss_jacobi_rule, Rule1D};
use crate::{Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

fn legendre_pair() -> &'static (Rule1D, Rule1D) {
    static RULES: OnceLock<(Rule1D, Rule1D)> = OnceLock::new();
    RULES.get_or_init(|| {
        let p = JacobiParams::new(0.0, 0.0).expect("valid");
        (
            gauss_jacobi_rule(10, p).expect("valid"),
            gauss_jacobi_rule(20, p).expect("valid"),
        )
    })
}

fn gauss_on(rule: &Rule1D, lo: f64, hi: f64, f: &impl Fn(f64) -> f64) -> f64 {
    let (c, r) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    r * rule.integrate(|t| f(c + r * t))
}

fn adaptive(lo: f64, hi: f64, f: &impl Fn(f64) -> f64, tol: f64, depth: usize) -> f64 {
    let (g10, g20) = legendre_pair();
    let coarse = gauss_on(g10, lo, hi, f);
    let fine = gauss_on(g20, lo, hi, f);
    if (fine - coarse).abs() <= tol.max(1e-15 * fine.abs()) || depth == 0 {
        return fine;
    }
    let mid = 0.5 * (lo + hi);
    adaptive(lo, mid, f, 0.5 * tol, depth - 1) + adaptive(mid, hi, f, 0.5 * tol, depth - 1)
}

/// Lower incomplete beta integral `β(a, b, z) = ∫₀^z t^{a-1} (1-t)^{b-1} dt`
/// for `a, b ≥ 1/2`.
///
/// The substitution `t = sin²θ` gives the smooth integrand
/// `2 sin^{2a-1}θ cos^{2b-1}θ` on `[0, asin √z]`, integrated by adaptive
/// Gauss–Legendre.
pub fn incomplete_beta(a: f64, b: f64, z: f64) -> Result<f64> {
    if !(a >= 0.5 && b >= 0.5) {
        return Err(Error::Parameter(format!("need a, b >= 1/2, got a = {a}, b = {b}")));
    }
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::Range(format!("z = {z} is not in [0, 1]")));
    }
    let top = z.sqrt().asin();
    let f = |th: f64| 2.0 * th.sin().powf(2.0 * a - 1.0) * th.cos().powf(2.0 * b - 1.0);
    Ok(adaptive(0.0, top, &f, 1e-15, 40))
}

/// `|𝕊^{n-1}| = 2π^{n/2} / Γ(n/2)`.
pub fn sphere_surface_area(n: usize) -> f64 {
    let h = n as f64 / 2.0;
    2.0 * PI.powf(h) / statrs::function::gamma::gamma(h)
}

/// `μ_{B^n}`-volume of the collar `N_ε` of points within Baran distance `ε`
/// of the boundary: `(|𝕊^{n-1}|/2) β(1/2, n/2, sin²ε)`, which is
/// `2π sin ε` for `n = 2`.
pub fn collar_volume(n: usize, eps: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Parameter("dimension must be at least 1".into()));
    }
    if !(eps > 0.0 && eps <= FRAC_PI_2) {
        return Err(Error::Range(format!("eps = {eps} is not in (0, π/2]")));
    }
    let s = eps.sin();
    Ok(0.5 * sphere_surface_area(n) * incomplete_beta(0.5, n as f64 / 2.0, s * s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn beta_matches_statrs() {
        for &(a, b) in &[(0.5, 1.0), (0.5, 1.5), (0.5, 0.5), (2.0, 3.5), (1.0, 1.0)] {
            for &z in &[0.0, 0.01, 0.3, 0.77, 1.0] {
                let ours = incomplete_beta(a, b, z).unwrap();
                let full = statrs::function::beta::beta(a, b);
                let reg = statrs::function::beta::beta_reg(a, b, z);
                assert_relative_eq!(ours, reg * full, max_relative = 1e-12, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn collar_in_two_dimensions() {
        assert_relative_eq!(collar_volume(2, FRAC_PI_2).unwrap(), 2.0 * PI, max_relative = 1e-13);
        assert_relative_eq!(
            collar_volume(2, 0.1).unwrap(),
            2.0 * PI * 0.1f64.sin(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn full_collar_is_total_mass() {
        // total equilibrium mass of B^n is |𝕊^n| / 2
        for n in 1..=6 {
            assert_relative_eq!(
                collar_volume(n, FRAC_PI_2).unwrap(),
                sphere_surface_area(n + 1) / 2.0,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn eps_range() {
        assert!(collar_volume(2, 0.0).is_err());
        assert!(collar_volume(2, 1.6).is_err());
        assert!(incomplete_beta(0.5, 1.0, 1.5).is_err());
    }
}
