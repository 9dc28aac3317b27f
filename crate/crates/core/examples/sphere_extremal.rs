//! Extremal function of the real sphere in its complexification.

use baran_spectral::sphere::{equilibrium_constant, extremal_eval, tangent_derivative, ComplexSpherePoint};

fn main() -> baran_spectral::Result<()> {
    for t in [0.0, 0.1, 0.5, 1.0, 2.0] {
        let z = ComplexSpherePoint::hyperbolic(3, t)?;
        println!("t = {t}: V* = {:.12}", extremal_eval(&z));
    }
    let x = [0.0, 0.6, 0.8];
    let v = [1.5, 0.8, -0.6];
    println!("d/dt V* along v = {:.9} (|v| = {:.9})", tangent_derivative(&x, &v)?, (1.5f64 * 1.5 + 1.0).sqrt());
    for n in 2..=6 {
        println!("c_{} = {:.10}", n - 1, equilibrium_constant(n));
    }
    Ok(())
}
