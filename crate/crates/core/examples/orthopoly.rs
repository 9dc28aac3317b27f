//! Monic Jacobi polynomials and their weighted norms.

use baran_spectral::orthopoly1d::{monic_jacobi_norm_sq, monic_jacobi_poly, weighted_norm_sq, JacobiParams};

fn main() -> baran_spectral::Result<()> {
    let p = JacobiParams::new(0.5, 1.5)?;
    for m in 0..=5 {
        let j = monic_jacobi_poly(m, p)?;
        println!(
            "J_{m}: {:.5?}  ‖J‖² closed {:.10} quadrature {:.10}",
            j.coeffs(),
            monic_jacobi_norm_sq(m, p),
            weighted_norm_sq(&j, p)
        );
    }
    Ok(())
}
