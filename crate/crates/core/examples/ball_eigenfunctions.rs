//! Checks L φ_α = s(s+n-1) φ_α for the orthogonal basis of the ball.

use baran_spectral::bases::basis_functions;
use baran_spectral::operators::eigen_residual_of;
use baran_spectral::DomainSpec;

fn main() -> baran_spectral::Result<()> {
    for n in 1..=3 {
        let d = DomainSpec::ball(n)?;
        println!("{d}");
        for b in basis_functions(d, 3)? {
            let r = eigen_residual_of(&b, 20)?;
            println!("  φ{}  λ = {:>5}  residual = {r:.2e}", b.key(), b.eigenvalue());
        }
    }
    Ok(())
}
