//! Real spherical harmonics on 𝕊² and their eigen-residuals.

use baran_spectral::bases::BasisFunction;
use baran_spectral::sphere::harmonic_angle_residual;
use baran_spectral::DomainSpec;

fn main() -> baran_spectral::Result<()> {
    let d = DomainSpec::sphere(3)?;
    for l in 0..=4usize {
        for m in -(l as i64)..=(l as i64) {
            let y = BasisFunction::harmonic(d, l, m)?;
            println!(
                "Y({l},{m:>2}): ‖Y‖² = {:.6}, λ = {}, residual {:.1e}",
                y.norm_sq(),
                y.eigenvalue(),
                harmonic_angle_residual(l, m, 10)?
            );
        }
    }
    Ok(())
}
