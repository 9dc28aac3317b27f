//! Sparse multivariate polynomial arithmetic.

use baran_spectral::PolyN;

fn main() -> baran_spectral::Result<()> {
    let x = PolyN::variable(2, 0);
    let y = PolyN::variable(2, 1);
    let p = &(&x * &x) - &(&y * &PolyN::constant(2, 3.0));
    let q = &p * &(&x + &y);
    println!("p = {p}");
    println!("q = {q}");
    println!("∂q/∂x = {}", q.derivative(0));
    println!("q(0.5, -1) = {}", q.eval(&[0.5, -1.0]));
    Ok(())
}
