//! Gauss–Jacobi rules and equilibrium cubature.

use baran_spectral::orthopoly1d::JacobiParams;
use baran_spectral::quadrature::{domain_rule, gauss_jacobi_rule};
use baran_spectral::DomainSpec;

fn main() -> baran_spectral::Result<()> {
    let cheb = gauss_jacobi_rule(5, JacobiParams::symmetric(-0.5)?)?;
    println!("Gauss–Chebyshev nodes {:.6?}", cheb.nodes());
    println!("weights {:.6?}", cheb.weights());

    for d in [DomainSpec::ball(2)?, DomainSpec::simplex(2)?, DomainSpec::sphere(3)?] {
        let rule = domain_rule(d, 8)?;
        let m2 = rule.integrate(|x| x[0] * x[0]) / rule.total_mass();
        println!("{d}: {} nodes, mass {:.12}, <x1²> = {m2:.12}", rule.len(), rule.total_mass());
    }
    Ok(())
}
