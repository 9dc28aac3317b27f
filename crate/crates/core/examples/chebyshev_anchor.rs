//! One-dimensional anchor: 𝒮 T_k = k² T_k with 𝒮 f = -(1-x²) f'' + x f'.

use baran_spectral::operators::lb_apply_ball;
use baran_spectral::orthopoly1d::{chebyshev_poly, ChebyshevKind};
use baran_spectral::PolyN;

fn main() -> baran_spectral::Result<()> {
    for k in [0, 1, 2, 5, 10, 20] {
        let t = chebyshev_poly(ChebyshevKind::First, k)?;
        let t = PolyN::from_terms(1, t.coeffs().iter().enumerate().map(|(i, &c)| (vec![i as u32], c)))?;
        let err = lb_apply_ball(&t).max_coeff_diff(&t.scale((k * k) as f64));
        println!("k = {k:>2}: max coefficient error {err:.1e}");
    }
    Ok(())
}
