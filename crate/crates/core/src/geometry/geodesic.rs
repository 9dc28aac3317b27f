//! Geodesic distances: closed forms through the hemisphere and square-root
//! lifts, and a shooting solver for the geodesic equation.

use super::curvature::christoffel_raw;
use super::{norm_sq, Chart, ChartMetric, ChartPoint, DomainKind, DomainSpec};
use crate::{Error, Result};
use nalgebra::{DMatrix, DVector};

const RK4_STEPS: usize = 256;
const NEWTON_MAX_ITER: usize = 40;
const NEWTON_TOL: f64 = 1e-13;
const ENDPOINT_TOL: f64 = 1e-10;

/// `(x, √(1 - |x|²))`: the upper-hemisphere point over `x`.
fn hemisphere_lift(x: &[f64]) -> Vec<f64> {
    let mut p = x.to_vec();
    p.push((1.0 - norm_sq(x)).max(0.0).sqrt());
    p
}

/// Great-circle angle between unit vectors, `2 atan2(|p - q|, |p + q|)`.
fn sphere_angle(p: &[f64], q: &[f64]) -> f64 {
    let diff: f64 = p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum();
    let sum: f64 = p.iter().zip(q).map(|(a, b)| (a + b) * (a + b)).sum();
    2.0 * diff.sqrt().atan2(sum.sqrt())
}

/// Riemannian distance of the Baran metric.
///
/// * ball: `arccos(⟨x, y⟩ + √(1 - |x|²)√(1 - |y|²))`;
/// * simplex: `2 arccos(Σ √(x_i y_i) + √((1 - Σx)(1 - Σy)))`;
/// * sphere: `arccos⟨x, y⟩`.
pub fn geodesic_distance(domain: DomainSpec, x: &ChartPoint, y: &ChartPoint) -> Result<f64> {
    if x.domain() != domain || y.domain() != domain {
        return Err(Error::Parameter(format!(
            "points belong to {} and {}, expected {domain}",
            x.domain(),
            y.domain()
        )));
    }
    let (a, b) = (x.coords(), y.coords());
    Ok(match domain.kind() {
        DomainKind::Ball => sphere_angle(&hemisphere_lift(a), &hemisphere_lift(b)),
        DomainKind::Simplex => {
            let ra: Vec<f64> = a.iter().map(|v| v.sqrt()).collect();
            let rb: Vec<f64> = b.iter().map(|v| v.sqrt()).collect();
            2.0 * sphere_angle(&hemisphere_lift(&ra), &hemisphere_lift(&rb))
        }
        DomainKind::Sphere => sphere_angle(a, b),
    })
}

/// Result of [`shoot_geodesic`].
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicShot {
    /// `√(v₀ᵀ g(x) v₀)`, the length of the unit-time geodesic.
    pub distance: f64,
    /// Initial velocity in chart coordinates.
    pub initial_velocity: Vec<f64>,
    /// `max |γ(1) - y|` in chart coordinates.
    pub endpoint_error: f64,
    pub iterations: usize,
}

fn flow<M: ChartMetric + ?Sized>(m: &M, u0: &[f64], v0: &[f64]) -> Result<Vec<f64>> {
    let d = u0.len();
    let h = 1.0 / RK4_STEPS as f64;
    let mut u = u0.to_vec();
    let mut v = v0.to_vec();
    let rhs = |u: &[f64], v: &[f64]| -> Result<Vec<f64>> { Ok(christoffel_raw(m, u)?.acceleration(v)) };
    let axpy = |x: &[f64], a: f64, y: &[f64]| -> Vec<f64> { x.iter().zip(y).map(|(p, q)| p + a * q).collect() };
    for _ in 0..RK4_STEPS {
        let k1u = v.clone();
        let k1v = rhs(&u, &v)?;
        let u2 = axpy(&u, 0.5 * h, &k1u);
        let v2 = axpy(&v, 0.5 * h, &k1v);
        let k2v = rhs(&u2, &v2)?;
        let u3 = axpy(&u, 0.5 * h, &v2);
        let v3 = axpy(&v, 0.5 * h, &k2v);
        let k3v = rhs(&u3, &v3)?;
        let u4 = axpy(&u, h, &v3);
        let v4 = axpy(&v, h, &k3v);
        let k4v = rhs(&u4, &v4)?;
        for i in 0..d {
            u[i] += h / 6.0 * (k1u[i] + 2.0 * v2[i] + 2.0 * v3[i] + v4[i]);
            v[i] += h / 6.0 * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
        }
    }
    Ok(u)
}

fn miss<M: ChartMetric + ?Sized>(m: &M, u0: &[f64], target: &[f64], v: &[f64]) -> Result<Vec<f64>> {
    Ok(flow(m, u0, v)?.iter().zip(target).map(|(a, b)| a - b).collect())
}

fn sup(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |a, x| a.max(x.abs()))
}

/// Damped Newton iteration on the initial velocity, starting from `v`
/// (halved until the trial geodesic stays in the chart).
fn newton<M: ChartMetric + ?Sized>(m: &M, u0: &[f64], target: &[f64], mut v: Vec<f64>) -> Result<(Vec<f64>, f64, usize)> {
    let d = u0.len();
    let mut f = loop {
        match miss(m, u0, target, &v) {
            Ok(f) => break f,
            Err(e) if sup(&v) < 1e-8 => return Err(e),
            Err(_) => v.iter_mut().for_each(|c| *c *= 0.5),
        }
    };
    let mut iterations = 0;
    while sup(&f) > NEWTON_TOL && iterations < NEWTON_MAX_ITER {
        iterations += 1;
        let delta = 1e-6 * (1.0 + sup(&v));
        let mut jac = DMatrix::zeros(d, d);
        for j in 0..d {
            let mut vp = v.clone();
            vp[j] += delta;
            let mut vm = v.clone();
            vm[j] -= delta;
            let (fp, fm) = match (miss(m, u0, target, &vp), miss(m, u0, target, &vm)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return Err(Error::Convergence("shooting Jacobian stencil leaves the chart".into())),
            };
            for i in 0..d {
                jac[(i, j)] = (fp[i] - fm[i]) / (2.0 * delta);
            }
        }
        let step = jac
            .lu()
            .solve(&DVector::from_iterator(d, f.iter().map(|x| -x)))
            .ok_or_else(|| Error::Convergence("singular shooting Jacobian".into()))?;
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let trial: Vec<f64> = v.iter().zip(step.iter()).map(|(a, s)| a + lambda * s).collect();
            if let Ok(ft) = miss(m, u0, target, &trial) {
                if sup(&ft) < sup(&f) {
                    v = trial;
                    f = ft;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    Ok((v, sup(&f), iterations))
}

/// Solves the boundary value problem `γ(0) = u0`, `γ(1) = target` for the
/// geodesic equation of `m` by Newton shooting on the initial velocity. When
/// the direct shot stalls, the target is moved in along the chart segment and
/// each solution seeds the next.
pub fn shoot_in_chart<M: ChartMetric + ?Sized>(m: &M, u0: &[f64], target: &[f64]) -> Result<GeodesicShot> {
    let chord: Vec<f64> = target.iter().zip(u0).map(|(a, b)| a - b).collect();
    let mut best = newton(m, u0, target, chord.clone());
    let mut total = best.as_ref().map(|r| r.2).unwrap_or(0);
    for pieces in [4usize, 16] {
        if matches!(&best, Ok((_, err, _)) if *err <= ENDPOINT_TOL) {
            break;
        }
        let mut v = chord.iter().map(|c| c / pieces as f64).collect::<Vec<f64>>();
        let mut stage = Err(Error::Convergence("no continuation stage".into()));
        for k in 1..=pieces {
            let s = k as f64 / pieces as f64;
            let t: Vec<f64> = u0.iter().zip(&chord).map(|(a, c)| a + s * c).collect();
            stage = newton(m, u0, &t, v.clone());
            match &stage {
                Ok((vk, _, it)) => {
                    total += it;
                    let grow = (k + 1) as f64 / k as f64;
                    v = vk.iter().map(|c| c * grow).collect();
                }
                Err(_) => break,
            }
        }
        best = stage;
    }
    let (v, endpoint_error, _) = best?;
    if endpoint_error > ENDPOINT_TOL {
        return Err(Error::Convergence(format!(
            "geodesic shooting stalled with endpoint error {endpoint_error:.3e}"
        )));
    }
    let g = m.metric(u0)?.g;
    let vv = DVector::from_column_slice(&v);
    Ok(GeodesicShot {
        distance: vv.dot(&(&g * &vv)).sqrt(),
        initial_velocity: v,
        endpoint_error,
        iterations: total,
    })
}

/// Distance by shooting along the geodesic equation with finite-difference
/// Christoffel symbols. On the sphere, `y` must lie in the open hemisphere of
/// the projection chart at `x`.
pub fn shoot_geodesic(domain: DomainSpec, x: &ChartPoint, y: &ChartPoint) -> Result<GeodesicShot> {
    if x.domain() != domain || y.domain() != domain {
        return Err(Error::Parameter(format!(
            "points belong to {} and {}, expected {domain}",
            x.domain(),
            y.domain()
        )));
    }
    let chart = Chart::at(x);
    if let Chart::SphereProjection { dropped, sign, .. } = chart {
        if !(y.coords()[dropped] * sign > 0.0) {
            return Err(Error::Domain(format!(
                "y is outside the hemisphere sign(ξ_{}) = {sign} of the chart at x",
                dropped + 1
            )));
        }
    }
    let u0 = chart.coords_of(x.coords());
    let u1 = chart.coords_of(y.coords());
    shoot_in_chart(&chart, &u0, &u1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn ball_radial_distance() {
        let d = DomainSpec::ball(2).unwrap();
        let o = ChartPoint::new(d, vec![0.0, 0.0]).unwrap();
        let y = ChartPoint::new(d, vec![0.5, 0.0]).unwrap();
        assert_abs_diff_eq!(geodesic_distance(d, &o, &y).unwrap(), PI / 6.0, epsilon = 1e-15);
        let shot = shoot_geodesic(d, &o, &y).unwrap();
        assert_abs_diff_eq!(shot.distance, PI / 6.0, epsilon = 1e-8);
        assert_eq!(geodesic_distance(d, &y, &y).unwrap(), 0.0);
    }

    #[test]
    fn simplex_distance_matches_shooting() {
        let d = DomainSpec::simplex(2).unwrap();
        let x = ChartPoint::new(d, vec![0.2, 0.3]).unwrap();
        let y = ChartPoint::new(d, vec![0.5, 0.1]).unwrap();
        let closed = geodesic_distance(d, &x, &y).unwrap();
        let shot = shoot_geodesic(d, &x, &y).unwrap();
        assert_abs_diff_eq!(closed, shot.distance, epsilon = 1e-7);
    }

    #[test]
    fn sphere_distance_and_hemisphere_check() {
        let d = DomainSpec::sphere(3).unwrap();
        let x = ChartPoint::new(d, vec![0.0, 0.0, 1.0]).unwrap();
        let y = ChartPoint::new(d, vec![0.6, 0.0, 0.8]).unwrap();
        let closed = geodesic_distance(d, &x, &y).unwrap();
        assert_abs_diff_eq!(closed, 0.6f64.asin(), epsilon = 1e-15);
        assert_abs_diff_eq!(shoot_geodesic(d, &x, &y).unwrap().distance, closed, epsilon = 1e-8);
        let z = ChartPoint::new(d, vec![0.6, 0.0, -0.8]).unwrap();
        assert!(shoot_geodesic(d, &x, &z).is_err());
        assert_abs_diff_eq!(geodesic_distance(d, &x, &z).unwrap(), PI - 0.6f64.asin(), epsilon = 1e-14);
    }

    #[test]
    fn mismatched_domains() {
        let b = DomainSpec::ball(2).unwrap();
        let s = DomainSpec::simplex(2).unwrap();
        let x = ChartPoint::new(b, vec![0.1, 0.1]).unwrap();
        let y = ChartPoint::new(s, vec![0.1, 0.1]).unwrap();
        assert!(geodesic_distance(b, &x, &y).is_err());
    }
}
