//! Fuzz test of |Dp(x)v| ≤ deg p · δ(x, v) √(1 - p(x)²) for sup |p| ≤ 1.

use baran_spectral::spectral::baran_fuzz;
use baran_spectral::DomainSpec;

fn main() -> baran_spectral::Result<()> {
    for d in [DomainSpec::ball(2)?, DomainSpec::simplex(2)?, DomainSpec::sphere(3)?] {
        let r = baran_fuzz(d, 200, 8, 0, 1e-9)?;
        println!("{d}: min margin {:.3e}, violations {}", r.min_margin, r.violations);
    }
    Ok(())
}
