//! Symmetry of L and the Dirichlet form.

use baran_spectral::operators::{dirichlet_form, lb_apply};
use baran_spectral::quadrature::domain_rule;
use baran_spectral::spectral::random_polynomial;
use baran_spectral::DomainSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> baran_spectral::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for d in [DomainSpec::ball(2)?, DomainSpec::simplex(2)?] {
        let rule = domain_rule(d, 10)?;
        let u = random_polynomial(&mut rng, 2, 3);
        let v = random_polynomial(&mut rng, 2, 4);
        let lu = lb_apply(d, &u)?;
        let lv = lb_apply(d, &v)?;
        println!(
            "{d}: <Lu,v> = {:.12}  <u,Lv> = {:.12}  E(u,v) = {:.12}",
            rule.integrate(|x| lu.eval(x) * v.eval(x)),
            rule.integrate(|x| u.eval(x) * lv.eval(x)),
            dirichlet_form(&rule, &u, &v)?
        );
    }
    Ok(())
}
