//! Christoffel symbols and the Einstein residual |Ric - k g|.

use baran_spectral::geometry::{christoffel, einstein_constant, einstein_residual, ricci};
use baran_spectral::{ChartPoint, DomainKind, DomainSpec};

fn main() -> baran_spectral::Result<()> {
    let d = DomainSpec::ball(2)?;
    let x = ChartPoint::new(d, vec![0.3, 0.2])?;
    let gamma = christoffel(d, &x)?;
    println!("Γ¹₁₁ = {:.8}, Γ¹₁₂ = {:.8}", gamma.get(0, 0, 0), gamma.get(0, 0, 1));
    println!("Ric = {:.8}", ricci(d, &x)?);

    for d in [DomainSpec::ball(3)?, DomainSpec::simplex(3)?, DomainSpec::sphere(4)?] {
        let x = if d.kind() == DomainKind::Sphere {
            vec![0.5, 0.5, 0.5, 0.5]
        } else {
            vec![0.2, 0.3, 0.1]
        };
        let r = einstein_residual(d, &ChartPoint::new(d, x)?)?;
        println!("{d}: k = {}, residual {r:.2e}", einstein_constant(d));
    }
    Ok(())
}
