//! Metric tensors, inverse metrics and equilibrium densities.

use baran_spectral::geometry::{baran_length, equilibrium_density, metric_eval};
use baran_spectral::{ChartPoint, DomainSpec};

fn main() -> baran_spectral::Result<()> {
    let b = DomainSpec::ball(2)?;
    let x = ChartPoint::new(b, vec![0.3, -0.4])?;
    let m = metric_eval(b, &x)?;
    println!("ball g = {:.6}g⁻¹ = {:.6}√det g = {:.6}", m.g, m.g_inv, m.sqrt_det);
    println!("density {:.6}", equilibrium_density(b, &x)?);
    println!("δ(x, e1) = {:.6}", baran_length(b, &x, &[1.0, 0.0])?);

    let s = DomainSpec::simplex(2)?;
    let y = ChartPoint::new(s, vec![0.2, 0.5])?;
    let m = metric_eval(s, &y)?;
    println!("simplex g = {:.6}g⁻¹ = {:.6}", m.g, m.g_inv);
    Ok(())
}
