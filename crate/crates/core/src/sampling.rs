//! Seeded random points and directions on the Baran bodies.

use crate::geometry::{norm_sq, DomainKind, DomainSpec};
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

/// Standard Gaussian vector.
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| StandardNormal.sample(rng)).collect()
}

/// Uniform direction on `𝕊^{n-1}`.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    loop {
        let g = gaussian(rng, n);
        let r = norm_sq(&g).sqrt();
        if r > 1e-12 {
            return g.iter().map(|v| v / r).collect();
        }
    }
}

/// Unit vector orthogonal to the unit vector `x`.
pub fn unit_tangent<R: Rng + ?Sized>(rng: &mut R, x: &[f64]) -> Vec<f64> {
    loop {
        let g = gaussian(rng, x.len());
        let d: f64 = g.iter().zip(x).map(|(a, b)| a * b).sum();
        let t: Vec<f64> = g.iter().zip(x).map(|(a, b)| a - d * b).collect();
        let r = norm_sq(&t).sqrt();
        if r > 1e-8 {
            let t: Vec<f64> = t.iter().map(|v| v / r).collect();
            // one more projection against rounding
            let d: f64 = t.iter().zip(x).map(|(a, b)| a * b).sum();
            return t.iter().zip(x).map(|(a, b)| a - d * b).collect();
        }
    }
}

/// Uniformly distributed point of the domain whose boundary clearance is at
/// least `clearance` (ball: `|x| ≤ 1 - clearance`; simplex: every barycentric
/// coordinate `≥ clearance`). Sphere points ignore `clearance`.
pub fn interior_point<R: Rng + ?Sized>(rng: &mut R, domain: DomainSpec, clearance: f64) -> Vec<f64> {
    let n = domain.n();
    match domain.kind() {
        DomainKind::Ball => {
            let dir = unit_vector(rng, n);
            let r = (1.0 - clearance) * rng.random::<f64>().powf(1.0 / n as f64);
            dir.iter().map(|v| v * r).collect()
        }
        DomainKind::Simplex => loop {
            let e: Vec<f64> = (0..=n).map(|_| Exp1.sample(rng)).collect();
            let s: f64 = e.iter().sum();
            let bary: Vec<f64> = e.iter().map(|v| v / s).collect();
            if bary.iter().all(|&b| b >= clearance) {
                let x: Vec<f64> = bary[..n].to_vec();
                // keep Σx < 1 strictly after rounding
                if x.iter().sum::<f64>() < 1.0 {
                    return x;
                }
            }
        },
        DomainKind::Sphere => unit_vector(rng, n),
    }
}

/// Point of the closed domain, drawn from its boundary.
pub fn boundary_point<R: Rng + ?Sized>(rng: &mut R, domain: DomainSpec) -> Vec<f64> {
    let n = domain.n();
    match domain.kind() {
        DomainKind::Ball | DomainKind::Sphere => unit_vector(rng, n),
        DomainKind::Simplex => {
            let e: Vec<f64> = (0..=n).map(|_| Exp1.sample(rng)).collect();
            let s: f64 = e.iter().sum();
            let mut bary: Vec<f64> = e.iter().map(|v| v / s).collect();
            let face = rng.random_range(0..=n);
            let lost = bary[face];
            bary[face] = 0.0;
            let rest = 1.0 - lost;
            bary.iter_mut().for_each(|b| *b /= rest);
            bary[..n].to_vec()
        }
    }
}

/// Nearest point of the closed domain (cheap projection used by searches).
pub fn clamp_to_closure(domain: DomainSpec, x: &mut [f64]) {
    match domain.kind() {
        DomainKind::Ball => {
            let r = norm_sq(x).sqrt();
            if r > 1.0 {
                x.iter_mut().for_each(|v| *v /= r);
            }
        }
        DomainKind::Sphere => {
            let r = norm_sq(x).sqrt();
            if r > 0.0 {
                x.iter_mut().for_each(|v| *v /= r);
            }
        }
        DomainKind::Simplex => {
            x.iter_mut().for_each(|v| *v = v.max(0.0));
            let s: f64 = x.iter().sum();
            if s > 1.0 {
                x.iter_mut().for_each(|v| *v /= s);
            }
        }
    }
}
