//! Orthogonality of the bases under the equilibrium measure.

use baran_spectral::quadrature::gram_matrix;
use baran_spectral::DomainSpec;

fn main() -> baran_spectral::Result<()> {
    let domains = [
        DomainSpec::ball(2)?,
        DomainSpec::ball(3)?,
        DomainSpec::simplex(2)?,
        DomainSpec::simplex(3)?,
        DomainSpec::sphere(3)?,
    ];
    for d in domains {
        let g = gram_matrix(d, 5)?;
        println!(
            "{d}: {} functions, off-diagonal ratio {:.1e}, norm deviation {:.1e}",
            g.basis.len(),
            g.max_off_diagonal_ratio(),
            g.max_norm_deviation()
        );
    }
    Ok(())
}
