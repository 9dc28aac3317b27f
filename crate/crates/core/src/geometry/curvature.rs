//! Christoffel symbols and Ricci curvature by central differences.

use super::{require_clearance, Chart, ChartMetric, ChartPoint, DomainKind, DomainSpec};
use crate::{Error, Result};
use nalgebra::DMatrix;

/// Step for differences of the metric in [`christoffel`].
pub const METRIC_STEP: f64 = 1e-5;

// The Ricci path differences Γ again, so the inner step is coarser to keep
// rounding noise in Γ below the outer truncation error.
const RICCI_METRIC_STEP: f64 = 1e-4;
const RICCI_STEP: f64 = 2.5e-4;

/// `Γ^i_{jk}` at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct Christoffel {
    dim: usize,
    data: Vec<f64>,
}

impl Christoffel {
    fn zeros(dim: usize) -> Self {
        Christoffel {
            dim,
            data: vec![0.0; dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[(i * self.dim + j) * self.dim + k]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        self.data[(i * self.dim + j) * self.dim + k] = v;
    }

    /// `max |Γ^i_{jk} - Γ^i_{kj}|`.
    pub fn max_asymmetry(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    worst = worst.max((self.get(i, j, k) - self.get(i, k, j)).abs());
                }
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    /// Geodesic acceleration `-Γ^i_{jk} v^j v^k`.
    pub fn acceleration(&self, v: &[f64]) -> Vec<f64> {
        let d = self.dim;
        (0..d)
            .map(|i| {
                let mut a = 0.0;
                for j in 0..d {
                    for k in 0..d {
                        a -= self.get(i, j, k) * v[j] * v[k];
                    }
                }
                a
            })
            .collect()
    }
}

fn shifted(u: &[f64], m: usize, h: f64) -> Vec<f64> {
    let mut v = u.to_vec();
    v[m] += h;
    v
}

fn stencil_err(e: Error) -> Error {
    match e {
        Error::Domain(s) => Error::Stencil(s),
        other => other,
    }
}

/// Fourth-order central difference `[-f(2h) + 8f(h) - 8f(-h) + f(-2h)] / 12h`.
fn central4<T, F>(u: &[f64], m: usize, h: f64, f: F) -> Result<[T; 4]>
where
    F: Fn(&[f64]) -> Result<T>,
{
    Ok([
        f(&shifted(u, m, 2.0 * h))?,
        f(&shifted(u, m, h))?,
        f(&shifted(u, m, -h))?,
        f(&shifted(u, m, -2.0 * h))?,
    ])
}

fn metric_derivatives<M: ChartMetric + ?Sized>(m: &M, u: &[f64], h: f64) -> Result<Vec<DMatrix<f64>>> {
    (0..m.dim())
        .map(|k| {
            let [p2, p1, m1, m2] = central4(u, k, h, |v| m.metric(v).map(|e| e.g).map_err(stencil_err))?;
            Ok((p1 - m1) * (8.0 / (12.0 * h)) + (m2 - p2) * (1.0 / (12.0 * h)))
        })
        .collect()
}

fn christoffel_with<M: ChartMetric + ?Sized>(m: &M, u: &[f64], h: f64) -> Result<Christoffel> {
    let d = m.dim();
    let g_inv = m.metric(u).map_err(stencil_err)?.g_inv;
    let dg = metric_derivatives(m, u, h)?;
    let mut out = Christoffel::zeros(d);
    for i in 0..d {
        for j in 0..d {
            for k in j..d {
                let mut s = 0.0;
                for l in 0..d {
                    s += g_inv[(i, l)] * (dg[j][(l, k)] + dg[k][(l, j)] - dg[l][(j, k)]);
                }
                out.set(i, j, k, 0.5 * s);
                out.set(i, k, j, 0.5 * s);
            }
        }
    }
    Ok(out)
}

/// `Γ^i_{jk}` of a chart metric at `u`.
pub fn christoffel_in_chart<M: ChartMetric + ?Sized>(m: &M, u: &[f64]) -> Result<Christoffel> {
    require_clearance(m, u)?;
    christoffel_with(m, u, METRIC_STEP)
}

/// Christoffel symbols of the Baran metric at `x` (projection chart for the
/// sphere).
pub fn christoffel(domain: DomainSpec, x: &ChartPoint) -> Result<Christoffel> {
    let (chart, u) = chart_of(domain, x)?;
    christoffel_in_chart(&chart, &u)
}

/// Unchecked Christoffel symbols for ODE integration (no clearance test).
pub(crate) fn christoffel_raw<M: ChartMetric + ?Sized>(m: &M, u: &[f64]) -> Result<Christoffel> {
    christoffel_with(m, u, METRIC_STEP)
}

/// `Ric_{ij} = ∂_l Γ^l_{ji} - ∂_j Γ^l_{li} + Γ^l_{lk} Γ^k_{ji} - Γ^l_{jk} Γ^k_{li}`.
pub fn ricci_in_chart<M: ChartMetric + ?Sized>(m: &M, u: &[f64]) -> Result<DMatrix<f64>> {
    require_clearance(m, u)?;
    let d = m.dim();
    let gamma = christoffel_with(m, u, RICCI_METRIC_STEP)?;
    let h = RICCI_STEP;
    // dgamma[a] = ∂_a Γ
    let dgamma: Vec<Christoffel> = (0..d)
        .map(|a| {
            let [p2, p1, m1, m2] = central4(u, a, h, |v| christoffel_with(m, v, RICCI_METRIC_STEP))?;
            let mut out = Christoffel::zeros(d);
            for (idx, o) in out.data.iter_mut().enumerate() {
                *o = (8.0 * (p1.data[idx] - m1.data[idx]) + m2.data[idx] - p2.data[idx]) / (12.0 * h);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut ric = DMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let mut s = 0.0;
            for l in 0..d {
                s += dgamma[l].get(l, j, i) - dgamma[j].get(l, l, i);
                for k in 0..d {
                    s += gamma.get(l, l, k) * gamma.get(k, j, i) - gamma.get(l, j, k) * gamma.get(k, l, i);
                }
            }
            ric[(i, j)] = s;
        }
    }
    Ok(ric)
}

/// Ricci tensor of the Baran metric at `x`.
pub fn ricci(domain: DomainSpec, x: &ChartPoint) -> Result<DMatrix<f64>> {
    let (chart, u) = chart_of(domain, x)?;
    ricci_in_chart(&chart, &u)
}

/// The constant `k` in `Ric = k g`.
///
/// The ball is isometric to the open unit hemisphere of `𝕊^n` (`k = n - 1`),
/// the simplex to the positive orthant of `𝕊^n` with the metric scaled by 4
/// (`k = (n - 1)/4`), and `𝕊^{n-1}` has `k = n - 2`.
pub fn einstein_constant(domain: DomainSpec) -> f64 {
    let n = domain.n() as f64;
    match domain.kind() {
        DomainKind::Ball => n - 1.0,
        DomainKind::Simplex => (n - 1.0) / 4.0,
        DomainKind::Sphere => n - 2.0,
    }
}

/// `max |Ric - k g|` with `k` from [`einstein_constant`].
pub fn einstein_residual(domain: DomainSpec, x: &ChartPoint) -> Result<f64> {
    einstein_residual_with_constant(domain, x, einstein_constant(domain))
}

/// `max |Ric - k g|` for a caller-supplied `k`.
pub fn einstein_residual_with_constant(domain: DomainSpec, x: &ChartPoint, k: f64) -> Result<f64> {
    let (chart, u) = chart_of(domain, x)?;
    let ric = ricci_in_chart(&chart, &u)?;
    let g = chart.metric(&u)?.g;
    Ok((ric - g * k).amax())
}

fn chart_of(domain: DomainSpec, x: &ChartPoint) -> Result<(Chart, Vec<f64>)> {
    if x.domain() != domain {
        return Err(Error::Parameter(format!("point belongs to {}, not {domain}", x.domain())));
    }
    let chart = Chart::at(x);
    let u = chart.coords_of(x.coords());
    Ok((chart, u))
}
