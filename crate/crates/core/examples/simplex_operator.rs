//! The simplex operator on ψ_α: closed form, divergence form, eigenvalue.

use baran_spectral::bases::{BasisFunction, MultiIndex};
use baran_spectral::operators::{dunkl_xu, lb_apply_numeric, lb_apply_simplex};
use baran_spectral::{ChartPoint, DomainSpec};

fn main() -> baran_spectral::Result<()> {
    let d = DomainSpec::simplex(2)?;
    let b = BasisFunction::new(d, MultiIndex::new(vec![2, 1])?)?;
    let p = b.polynomial();
    println!("ψ(2,1) = {p}");
    println!("D ψ     = {}", dunkl_xu(&p));
    println!("eigenvalue s(s+(n-1)/2) = {}", b.eigenvalue());

    let lp = lb_apply_simplex(&p);
    for x in [[0.2, 0.3], [0.1, 0.1], [0.6, 0.05]] {
        let pt = ChartPoint::new(d, x.to_vec())?;
        let fd = lb_apply_numeric(d, |y| b.eval(y), &pt)?;
        println!("x = {x:?}: closed {:.10}  divergence form {:.10}", lp.eval(&x), fd);
    }
    Ok(())
}
