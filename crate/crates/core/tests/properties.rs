//! Randomised invariants of the metric, operators and projections.

use approx::assert_relative_eq;
use baran_spectral::geometry::{ball_metric, geodesic_distance, simplex_metric, Chart};
use baran_spectral::operators::{dirichlet_form, lb_apply};
use baran_spectral::quadrature::domain_rule;
use baran_spectral::spectral::{baran_margin, project};
use baran_spectral::{ChartPoint, DomainSpec, PolyN};
use nalgebra::DMatrix;
use proptest::prelude::*;

fn ball_point(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, n).prop_filter_map("inside", |x| {
        let r: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        (r < 0.999).then_some(x)
    })
}

fn simplex_point(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.001f64..1.0, n + 1).prop_map(|w| {
        let s: f64 = w.iter().sum();
        w[..w.len() - 1].iter().map(|v| v / s).collect()
    })
}

fn poly(n: usize, deg: usize) -> impl Strategy<Value = PolyN> {
    let exps = baran_spectral::bases::enumerate_indices(n, deg);
    prop::collection::vec(-1.0f64..1.0, exps.len()).prop_map(move |c| {
        PolyN::from_terms(
            n,
            exps.iter()
                .zip(c)
                .map(|(a, c)| (a.alpha().iter().map(|&k| k as u32).collect(), c)),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ball_inverse_is_relatively_exact(x in ball_point(3)) {
        let m = ball_metric(&x).unwrap();
        let w = 1.0 - x.iter().map(|v| v * v).sum::<f64>();
        let err = (&m.g * &m.g_inv - DMatrix::identity(3, 3)).amax();
        prop_assert!(err <= 1e-14 / w);
        prop_assert!((m.sqrt_det - w.powf(-0.5)).abs() <= 1e-12 * m.sqrt_det);
    }

    #[test]
    fn simplex_metric_is_four_times_the_ball_pullback(x in simplex_point(3)) {
        let root: Vec<f64> = x.iter().map(|v| v.sqrt()).collect();
        let b = ball_metric(&root).unwrap();
        let s = simplex_metric(&x).unwrap();
        // pushforward of G_B under the square root map
        let jac = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(3, root.iter().map(|r| 0.5 / r)));
        let pulled = &jac * &b.g * &jac * 4.0;
        let scale = s.g.amax();
        prop_assert!((pulled - &s.g).amax() <= 1e-12 * scale);
    }

    #[test]
    fn ball_distance_is_a_metric(x in ball_point(2), y in ball_point(2), z in ball_point(2)) {
        let d = DomainSpec::ball(2).unwrap();
        let (x, y, z) = (
            ChartPoint::new(d, x).unwrap(),
            ChartPoint::new(d, y).unwrap(),
            ChartPoint::new(d, z).unwrap(),
        );
        let dxy = geodesic_distance(d, &x, &y).unwrap();
        let dyx = geodesic_distance(d, &y, &x).unwrap();
        let dxz = geodesic_distance(d, &x, &z).unwrap();
        let dzy = geodesic_distance(d, &z, &y).unwrap();
        prop_assert!((dxy - dyx).abs() <= 1e-14);
        prop_assert!(dxy <= dxz + dzy + 1e-12);
        prop_assert!(dxy <= std::f64::consts::PI);
    }

    #[test]
    fn operator_is_symmetric_and_nonnegative(u in poly(2, 4), v in poly(2, 3)) {
        for d in [DomainSpec::ball(2).unwrap(), DomainSpec::simplex(2).unwrap(), DomainSpec::sphere(2).unwrap()] {
            let rule = domain_rule(d, 10).unwrap();
            let lu = lb_apply(d, &u).unwrap();
            let lv = lb_apply(d, &v).unwrap();
            let a = rule.integrate(|x| lu.eval(x) * v.eval(x));
            let b = rule.integrate(|x| u.eval(x) * lv.eval(x));
            prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
            prop_assert!((a - dirichlet_form(&rule, &u, &v).unwrap()).abs() <= 1e-9 * (1.0 + a.abs()));
            prop_assert!(rule.integrate(|x| lu.eval(x) * u.eval(x)) >= -1e-10);
        }
    }

    #[test]
    fn projection_is_idempotent(f in poly(2, 4)) {
        let d = DomainSpec::simplex(2).unwrap();
        let e = project(d, |x| f.eval(x), 5).unwrap();
        let e2 = project(d, |x| e.eval(x), 5).unwrap();
        for (a, b) in e.coeffs().iter().zip(e2.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }

    #[test]
    fn linear_forms_satisfy_the_baran_bound(c in prop::collection::vec(-1.0f64..1.0, 2), x in ball_point(2), t in 0.0f64..6.3) {
        // p = <c, x> / |c| has sup norm 1 on the ball
        let r = (c[0] * c[0] + c[1] * c[1]).sqrt();
        prop_assume!(r > 1e-3);
        let d = DomainSpec::ball(2).unwrap();
        let p = PolyN::from_terms(2, [(vec![1, 0], c[0] / r), (vec![0, 1], c[1] / r)]).unwrap();
        prop_assume!(p.eval(&x).abs() < 0.999);
        let m = baran_margin(d, &p, &ChartPoint::new(d, x).unwrap(), &[t.cos(), t.sin()]).unwrap();
        prop_assert!(m >= -1e-12);
    }
}

#[test]
fn sphere_chart_round_trip() {
    let d = DomainSpec::sphere(3).unwrap();
    let x = ChartPoint::new(d, vec![0.36, -0.48, 0.8]).unwrap();
    let chart = Chart::at(&x);
    let u = chart.coords_of(x.coords());
    assert_eq!(u.len(), 2);
    let back = chart.lift(&u);
    for (a, b) in back.iter().zip(x.coords()) {
        assert_relative_eq!(*a, *b, epsilon = 1e-15);
    }
}
