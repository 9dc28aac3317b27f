//! Closed-form Baran distances against geodesic shooting.

use baran_spectral::geometry::{geodesic_distance, shoot_geodesic};
use baran_spectral::{ChartPoint, DomainSpec};

fn main() -> baran_spectral::Result<()> {
    let cases = [
        (DomainSpec::ball(2)?, vec![0.1, 0.6], vec![-0.5, -0.2]),
        (DomainSpec::simplex(2)?, vec![0.1, 0.2], vec![0.5, 0.4]),
        (DomainSpec::sphere(3)?, vec![0.0, 0.6, 0.8], vec![0.6, 0.0, 0.8]),
    ];
    for (d, x, y) in cases {
        let (x, y) = (ChartPoint::new(d, x)?, ChartPoint::new(d, y)?);
        let closed = geodesic_distance(d, &x, &y)?;
        let shot = shoot_geodesic(d, &x, &y)?;
        println!(
            "{d}: closed {closed:.12}  shooting {:.12}  ({} Newton steps)",
            shot.distance, shot.iterations
        );
    }
    Ok(())
}
