//! Fourier coefficients and Sobolev sums of a smooth function.

use baran_spectral::spectral::{project, sobolev_sums};
use baran_spectral::DomainSpec;

fn main() -> baran_spectral::Result<()> {
    let d = DomainSpec::ball(2)?;
    let e = project(d, |x| (x[0] + 0.5 * x[1]).exp(), 8)?;
    let s = sobolev_sums(&e);
    for (k, en) in s.degree_energies.iter().enumerate() {
        println!("degree {k}: energy {en:.3e}");
    }
    println!("S1 = {:.8}, S2 = {:.8}, growth {:?}", s.s1, s.s2, s.growth_rate);
    println!("f(0.3, 0.1) = {:.10}, expansion {:.10}", (0.35f64).exp(), e.eval(&[0.3, 0.1]));
    Ok(())
}
