//! Equilibrium mass of the collar {1 - |x| < 1 - cos ε} of the ball.

use baran_spectral::geometry::collar_volume;

fn main() -> baran_spectral::Result<()> {
    for n in 1..=4 {
        for eps in [0.1, 0.05, 0.025, 0.0125, 0.00625] {
            let v = collar_volume(n, eps)?;
            println!("n={n} ε={eps:<7} vol {v:.6e}  log vol/log ε {:.4}  vol/ε² {:.3}", v.ln() / eps.ln(), v / (eps * eps));
        }
    }
    Ok(())
}
