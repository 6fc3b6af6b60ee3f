use gordon_core::appell::{appell_f2_double, appell_f2_single_sum, AppellF2Params};
use gordon_core::gordon::{eval_2f1_double_sum, eval_f1_sum, eval_f2_series};
use gordon_core::quadrature::integrate_gordon;
use gordon_core::report::rel_residual;
use gordon_core::special::{hyp1f1, hyp2f1};
use gordon_core::{eval_auto, GordonParams, SeriesControl, Sign};
use proptest::prelude::*;

fn ctrl() -> SeriesControl {
    SeriesControl::default()
}

fn off_poles(x: f64) -> bool {
    x > 0.0 || (x - x.round()).abs() > 0.05
}

/// Points with j ≥ p ≥ 0 and |w| + |z| ≤ 0.8λ.
fn convergent_point() -> impl Strategy<Value = GordonParams> {
    (
        (0.1..2.5f64, 0.1..2.5f64, 0.3..4.0f64),
        (0i64..=4, 0u32..=4, any::<bool>()),
        (0.5..5.0f64, -0.8..0.8f64, -1.0..1.0f64),
    )
        .prop_map(|((b, bp, c), (j, p, plus), (lambda, wf, zf))| {
            let p = p.min(j as u32);
            let zf = zf * (0.8 - wf.abs());
            GordonParams {
                b,
                b_prime: bp,
                c,
                j,
                p,
                sign: if plus { Sign::Plus } else { Sign::Minus },
                lambda,
                w: wf * lambda,
                z: zf * lambda,
            }
        })
        .prop_filter("second denominator near a pole", |g| off_poles(g.c2()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn kummer_transformation(a in -3.0..3.0f64, c in 0.3..5.0f64, z in -8.0..8.0f64) {
        let lhs = hyp1f1(a, c, z, &ctrl()).unwrap().value;
        let rhs = z.exp() * hyp1f1(c - a, c, -z, &ctrl()).unwrap().value;
        prop_assert!(rel_residual(lhs, rhs) < 1e-11 || (lhs - rhs).abs() < 1e-13, "{lhs} vs {rhs}");
    }

    #[test]
    fn gauss_pfaff(a in -2.0..2.0f64, b in -2.0..2.0f64, c in 0.3..4.0f64, z in -0.45..0.45f64) {
        let lhs = hyp2f1(a, b, c, z, &ctrl()).unwrap().value;
        let rhs = (1.0 - z).powf(-a) * hyp2f1(a, c - b, c, z / (z - 1.0), &ctrl()).unwrap().value;
        prop_assert!(rel_residual(lhs, rhs) < 1e-12 || (lhs - rhs).abs() < 1e-13);
    }

    #[test]
    fn f2_symmetry_and_single_sum(
        a in 0.2..3.0f64, b in 0.1..2.0f64, bp in 0.1..2.0f64,
        c in 0.4..3.0f64, cp in 0.4..3.0f64, w in -0.45..0.45f64, zf in -1.0..1.0f64,
    ) {
        let z = zf * (0.9 - w.abs());
        let p = AppellF2Params { a, b, b_prime: bp, c, c_prime: cp, w, z };
        let q = AppellF2Params { a, b: bp, b_prime: b, c: cp, c_prime: c, w: z, z: w };
        let d = appell_f2_double(&p, &ctrl()).unwrap().value;
        prop_assert!(rel_residual(d, appell_f2_double(&q, &ctrl()).unwrap().value) < 1e-12);
        prop_assert!(rel_residual(d, appell_f2_single_sum(&p, &ctrl()).unwrap().value) < 1e-10);
    }

    #[test]
    fn scaling_law(g in convergent_point()) {
        let (unit, factor) = g.rescaled();
        let direct = eval_auto(&g, &ctrl()).unwrap().value;
        let scaled = factor * eval_auto(&unit, &ctrl()).unwrap().value;
        prop_assert!(rel_residual(direct, scaled) < 1e-11);
    }

    #[test]
    fn swapping_the_factors(g in convergent_point()) {
        let s = g.swapped();
        prop_assume!(off_poles(s.c) && off_poles(s.c2()));
        let a = eval_auto(&g, &ctrl()).unwrap();
        let b = eval_auto(&s, &ctrl()).unwrap();
        let tol = if a.has_cancellation_warning() || b.has_cancellation_warning() { 1e-7 } else { 1e-9 };
        prop_assert!(rel_residual(a.value, b.value) < tol, "{} vs {}", a.value, b.value);
    }

    #[test]
    fn general_strategies_agree(g in convergent_point()) {
        let results = [
            eval_f2_series(&g, &ctrl()).unwrap(),
            eval_f1_sum(&g, &ctrl()).unwrap(),
            eval_2f1_double_sum(&g, &ctrl()).unwrap(),
        ];
        let warned = results.iter().any(|r| r.has_cancellation_warning());
        let tol = if warned { 1e-7 } else { 1e-9 };
        for x in &results {
            for y in &results {
                prop_assert!(rel_residual(x.value, y.value) <= tol, "{:?} vs {:?}", x, y);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn oracle_agreement(g in convergent_point()) {
        let v = eval_auto(&g, &ctrl()).unwrap().value;
        let q = integrate_gordon(&g, 1e-10).unwrap();
        let diff = (v - q.value).abs();
        prop_assert!(diff <= 1e-7 * v.abs() || diff <= 1e-12, "{v} vs {:?}", q);
    }
}
