use super::*;
use crate::gordon::{eval_f2_series, Sign};
use crate::report::Status;

fn ctrl() -> SeriesControl {
    SeriesControl::default()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

fn deg(m: u32, n: u32, c: f64, j: i64, q: i64, lambda: f64, w: f64, z: f64) -> PolyGordonParams {
    let sign = if q < 0 { Sign::Minus } else { Sign::Plus };
    PolyGordonParams::degrees(m, n, c, j, q.unsigned_abs() as u32, sign, lambda, w, z)
}

#[test]
fn anchor_values() {
    let c = ctrl();
    let r = poly_gordon(&deg(1, 1, 1.0, 1, 0, 1.0, 1.0, 1.0), &c).unwrap();
    assert_eq!(r.strategy.tag(), "SPECIAL-53");
    assert!((r.value - 3.0).abs() < 1e-12);
    let r = poly_gordon(&deg(0, 0, 2.0, 0, 0, 1.0, 1.0, 1.0), &c).unwrap();
    assert!((r.value - 1.0).abs() < 1e-14);
    let r = poly_gordon(&deg(2, 3, 2.5, 0, 0, 1.0, 1.0, 1.0), &c).unwrap();
    assert_eq!(r.value, 0.0);
    // single polynomial factors
    let r = poly_gordon(&deg(0, 2, 1.0, 1, 1, 2.0, 0.0, 1.0), &c).unwrap();
    assert!((r.value - 1.0 / 16.0).abs() < 1e-15);
    let r = poly_gordon(&deg(0, 1, 1.0, 1, 0, 1.0, 0.0, 1.0), &c).unwrap();
    assert!((r.value + 1.0).abs() < 1e-14);
}

#[test]
fn orthogonality_is_exact() {
    let c = ctrl();
    for &cc in &[0.5, 1.0, 2.5] {
        for &lam in &[0.5, 1.0, 3.0] {
            for m in 0..=10 {
                for n in 0..=10 {
                    let r = poly_gordon(&deg(m, n, cc, 0, 0, lam, lam, lam), &c).unwrap();
                    let diag = gamma_over(cc, lam) * factorial(n as u64) / pochhammer(cc, n as u64);
                    if m == n {
                        assert!(rel(r.value, diag) < 1e-12, "{m} {n} {cc} {lam}");
                    } else {
                        assert_eq!(r.value, 0.0);
                    }
                }
            }
        }
    }
}

fn gamma_over(c: f64, lam: f64) -> f64 {
    crate::special::gamma(c).unwrap() / lam.powf(c)
}

#[test]
fn routes_agree_with_generic_double_sum() {
    let c = ctrl();
    let cases: &[(PolyGordonParams, &str)] = &[
        (deg(2, 3, 1.5, 4, 1, 2.0, 2.0, 2.0), "SPECIAL-47"),
        (deg(3, 2, 1.5, 3, 2, 2.0, 2.0, 2.0), "SPECIAL-47"),
        (deg(2, 1, 1.5, 3, 0, 2.0, 2.0, 2.0), "SPECIAL-48"),
        (deg(1, 3, 1.7, 0, 1, 2.0, 2.0, 2.0), "SPECIAL-49"),
        (deg(1, 3, 1.7, 0, -1, 2.0, 2.0, 2.0), "SPECIAL-49"),
        (deg(2, 2, 1.7, 3, 0, 2.0, 2.0, 2.0), "SPECIAL-52"),
        (deg(3, 3, 1.7, -1, 0, 2.0, 2.0, 2.0), "SPECIAL-52"),
        (deg(3, 1, 1.7, 2, 1, 2.0, 2.0, 0.6), "SPECIAL-68"),
        (deg(2, 2, 1.7, 2, -1, 2.0, 0.7, 2.0), "SPECIAL-45"),
        (deg(2, 3, 1.7, 3, 1, 2.0, 2.0, -0.5), "SPECIAL-46"),
        (deg(2, 2, 1.7, 3, 0, 2.0, 2.0, 0.5), "SPECIAL-66"),
        (deg(3, 3, 1.7, 3, 0, 2.0, 2.0, 0.5), "SPECIAL-67"),
        (deg(1, 2, 1.7, 2, 0, 1.0, 1.5, 0.5), "SPECIAL-61"),
        (deg(1, 2, 1.7, 1, 0, 1.0, 1.5, 0.5), "SPECIAL-60"),
        (deg(2, 1, 1.7, 2, 1, 1.25, 0.75, 1.75), "SPECIAL-60"),
        (deg(3, 2, 1.7, 3, -1, 0.75, 1.25, 0.25), "SPECIAL-60"),
        (deg(2, 3, 1.7, 0, 0, 1.25, 1.5, 1.0), "SPECIAL-62"),
        (deg(2, 3, 1.7, 0, 0, 2.0, 0.3, -1.1), "SPECIAL-63"),
        (deg(2, 2, 1.7, 1, 0, 2.0, 0.3, -1.1), "SPECIAL-65"),
        (deg(3, 3, 1.7, -1, 0, 2.0, 0.3, 0.8), "SPECIAL-65"),
        (deg(2, 3, 1.7, 2, 1, 2.0, 0.3, -1.1), "SPECIAL-42"),
    ];
    for (p, tag) in cases {
        let m = p.m().unwrap();
        let r = poly_gordon(p, &c).unwrap();
        assert_eq!(r.strategy.tag(), *tag, "{p:?}");
        let a = double_polynomial(p, m, &c).unwrap().value;
        let b = double_polynomial_by_second(p, m, &c).unwrap().value;
        assert!(rel(a, b) < 1e-12 || (a - b).abs() < 1e-14, "{p:?}: {a} vs {b}");
        assert!(rel(r.value, a) < 1e-11 || (r.value - a).abs() < 1e-14, "{tag}: {} vs {a}", r.value);
    }
}

#[test]
fn double_sum_matches_f2_series() {
    let c = ctrl();
    let p = deg(2, 3, 1.3, 1, -1, 3.0, 0.5, -0.9);
    let a = double_polynomial(&p, 2, &c).unwrap().value;
    let f = eval_f2_series(&p.base(), &c).unwrap().value;
    assert!(rel(a, f) < 1e-12);
}

#[test]
fn one_polynomial_sum_matches_f2_series() {
    let c = ctrl();
    let p = PolyGordonParams { first: First::Numerator(0.75), ..deg(0, 2, 1.5, 1, 1, 3.0, 0.5, 0.7) };
    let r = poly_gordon(&p, &c).unwrap();
    assert_eq!(r.strategy.tag(), "SPECIAL-40");
    let f = eval_f2_series(&p.base(), &c).unwrap().value;
    assert!(rel(r.value, f) < 1e-12);
    let via = eval_polynomial_case(&p.base().swapped(), &c).unwrap();
    assert!(rel(via.value, f) < 1e-12);
    let none = GordonParams { b_prime: 0.3, ..p.base() };
    assert!(matches!(eval_polynomial_case(&none, &c), Err(Error::NotApplicable(_))));
}

fn target_value(p: &PolyGordonParams, c: &SeriesControl) -> f64 {
    let t = p.ladder_target();
    match nonpositive_integer(t.b) {
        Some(m) => double_polynomial(&PolyGordonParams::from_gordon(&t).unwrap(), m as u32, c).unwrap().value,
        None => eval_f2_series(&t, c).unwrap().value,
    }
}

#[test]
fn ladders_match_their_target_integrals() {
    let c = ctrl();
    let general = PolyGordonParams { first: First::Numerator(0.6), ..deg(0, 3, 1.4, 1, 1, 3.0, 0.4, 0.9) };
    for mu in 0..=3 {
        let p = PolyGordonParams { mu, ..general };
        let r = poly_gordon_derivative_ladder(&p, &c).unwrap();
        assert!(rel(r.value, target_value(&p, &c)) < 1e-11, "mu {mu}");
    }
    let two = deg(3, 2, 1.4, 1, -1, 2.0, 0.8, -0.6);
    for s in 0..=3 {
        for mu in 0..=2 {
            let p = PolyGordonParams { s, mu, ..two };
            let r = poly_gordon_derivative_ladder(&p, &c).unwrap();
            assert!(rel(r.value, target_value(&p, &c)) < 1e-11, "s {s} mu {mu}: {}", r.value);
        }
    }
    // full z ladder: the second factor is one, leaving a single-factor moment
    let p = PolyGordonParams { mu: 3, ..general };
    let t = p.ladder_target();
    let direct = crate::gordon::eval_special(&t, &c).unwrap().value;
    assert!(rel(poly_gordon_derivative_ladder(&p, &c).unwrap().value, direct) < 1e-10);
    assert!(matches!(poly_gordon_derivative_ladder(&PolyGordonParams { s: 4, ..two }, &c), Err(Error::OrderBound(_))));
    assert!(matches!(
        poly_gordon_derivative_ladder(&PolyGordonParams { mu: 1, z: 0.0, ..general }, &c),
        Err(Error::Domain(_))
    ));
}

/// (a)_{N}/N! — the factor turning ₁F₁(−N; a; ·) into L_N^{a−1}(·).
fn lnorm(a: f64, deg: u32) -> f64 {
    pochhammer(a, deg as u64) / factorial(deg as u64)
}

fn laguerre_reference(p: &LaguerreParams, c: &SeriesControl) -> f64 {
    let q = p.sign.factor() * p.p as i64;
    let (first, wnorm) = match p.w_factor {
        WFactor::Confluent(b) => (First::Numerator(b), 1.0),
        WFactor::Laguerre(m) => (First::Degree(m), lnorm(p.c + p.s as f64, m - p.s)),
    };
    let pg = PolyGordonParams {
        first,
        n: p.n,
        c: p.c,
        j: p.j,
        p: p.p,
        sign: p.sign,
        lambda: p.lambda,
        w: p.w,
        z: p.z,
        s: p.s,
        mu: p.mu,
    };
    let znorm = lnorm(p.c + q as f64 + p.mu as f64, p.n - p.mu);
    znorm * wnorm * target_value(&pg, c)
}

#[test]
fn laguerre_routes_match_confluent_forms() {
    let c = ctrl();
    let base = LaguerreParams {
        n: 3,
        w_factor: WFactor::Confluent(0.7),
        c: 1.5,
        j: 1,
        p: 1,
        sign: Sign::Plus,
        lambda: 2.0,
        w: 0.5,
        z: 0.6,
        s: 0,
        mu: 0,
    };
    let cases: Vec<(LaguerreParams, &str)> = vec![
        (base, "SPECIAL-74"),
        (LaguerreParams { mu: 2, ..base }, "SPECIAL-77"),
        (LaguerreParams { mu: 1, s: 2, ..base }, "SPECIAL-78"),
        (LaguerreParams { w_factor: WFactor::Laguerre(2), ..base }, "SPECIAL-79"),
        (LaguerreParams { w_factor: WFactor::Laguerre(2), s: 1, ..base }, "SPECIAL-80"),
        (LaguerreParams { w_factor: WFactor::Laguerre(2), s: 2, mu: 3, ..base }, "SPECIAL-81"),
        (LaguerreParams { w_factor: WFactor::Laguerre(2), j: 2, w: 2.0, ..base }, "SPECIAL-82"),
        (LaguerreParams { w_factor: WFactor::Laguerre(1), j: 1, w: 2.0, ..base }, "SPECIAL-83"),
        (LaguerreParams { w_factor: WFactor::Laguerre(2), j: 0, p: 0, w: 2.0, ..base }, "SPECIAL-84"),
    ];
    for (p, tag) in cases {
        let r = laguerre_gordon(&p, &c).unwrap();
        assert_eq!(r.strategy.tag(), tag);
        let want = laguerre_reference(&p, &c);
        assert!(rel(r.value, want) < 1e-11, "{tag}: {} vs {want}", r.value);
    }
    // b = 0: a single Laguerre factor
    let single = LaguerreParams { w_factor: WFactor::Confluent(0.0), ..base };
    let r = laguerre_gordon(&single, &c).unwrap();
    assert_eq!(r.strategy.tag(), "SPECIAL-75");
    let want = lnorm(2.5, 3) * crate::gordon::eval_special(&GordonParams { b: 0.0, b_prime: -3.0, c: 1.5, j: 1, p: 1, sign: Sign::Plus, lambda: 2.0, w: 0.5, z: 0.6 }, &c).unwrap().value;
    assert!(rel(r.value, want) < 1e-12);
}

#[test]
fn laguerre_anchors() {
    let c = ctrl();
    assert_eq!(laguerre_moment(3, 1.0, 1.0, 2.0).unwrap().value, 0.0);
    assert!(rel(laguerre_moment(0, 1.0, 1.0, 2.0).unwrap().value, 0.25) < 1e-15);
    // moments of x^{c+j} against L_n^c: (−1)^j at n = j, zero beyond
    let v = laguerre_moment(2, 1.5, 3.5, 1.0).unwrap().value;
    assert!(rel(v, crate::special::gamma(4.5).unwrap()) < 1e-14);
    assert_eq!(laguerre_moment(3, 1.5, 3.5, 1.0).unwrap().value, 0.0);
    let ortho = |n, m| LaguerreParams {
        n,
        w_factor: WFactor::Laguerre(m),
        c: 2.0,
        j: 0,
        p: 0,
        sign: Sign::Plus,
        lambda: 1.0,
        w: 1.0,
        z: 1.0,
        s: 0,
        mu: 0,
    };
    let r = laguerre_gordon(&ortho(1, 1), &c).unwrap();
    assert_eq!(r.strategy.tag(), "SPECIAL-85");
    assert!((r.value - 2.0).abs() < 1e-14);
    assert_eq!(laguerre_gordon(&ortho(1, 2), &c).unwrap().value, 0.0);
    let p = LaguerreParams { n: 1, w_factor: WFactor::Laguerre(0), c: 1.0, lambda: 2.0, w: 2.0, z: 0.5, ..ortho(1, 0) };
    assert!((laguerre_gordon(&p, &c).unwrap().value - 0.375).abs() < 1e-15);
}

fn hermite_reference(h: &HermiteParams, c: &SeriesControl) -> f64 {
    let even = |m: u32| parity(m as u64) * factorial(2 * m as u64) / factorial(m as u64);
    match *h {
        HermiteParams::LaguerreEven { n, m, j, p, sign, lambda, w, z } => {
            let q = sign.factor() * p as i64;
            let pg = deg(m, n, 0.5, j, q, lambda, w, z);
            even(m) * lnorm(q as f64 + 0.5, n) * double_polynomial(&pg, m, c).unwrap().value
        }
        HermiteParams::EvenOdd { m, n, j, lambda, w, z } => {
            let odd = parity(n as u64) * factorial(2 * n as u64 + 1) / factorial(n as u64);
            let pg = deg(m, n, 0.5, j, 1, lambda, w, z);
            even(m) * odd * 2.0 * z.sqrt() * double_polynomial(&pg, m, c).unwrap().value
        }
        HermiteParams::EvenEven { m, n, j, lambda, w, z } => {
            let pg = deg(m, n, 0.5, j, 0, lambda, w, z);
            even(m) * even(n) * double_polynomial(&pg, m, c).unwrap().value
        }
    }
}

#[test]
fn hermite_routes_match_confluent_forms() {
    let c = ctrl();
    let cases = [
        (HermiteParams::LaguerreEven { n: 2, m: 3, j: 1, p: 1, sign: Sign::Minus, lambda: 2.0, w: 0.7, z: 0.4 }, "SPECIAL-86"),
        (HermiteParams::LaguerreEven { n: 2, m: 2, j: 2, p: 1, sign: Sign::Plus, lambda: 2.0, w: 2.0, z: 0.4 }, "SPECIAL-87"),
        (HermiteParams::LaguerreEven { n: 3, m: 3, j: 0, p: 0, sign: Sign::Plus, lambda: 1.5, w: 1.5, z: 1.5 }, "SPECIAL-89"),
        (HermiteParams::LaguerreEven { n: 2, m: 2, j: 0, p: 1, sign: Sign::Plus, lambda: 1.5, w: 1.5, z: 1.5 }, "SPECIAL-86"),
        (HermiteParams::EvenOdd { m: 2, n: 1, j: 1, lambda: 2.0, w: 0.5, z: 0.8 }, "SPECIAL-90"),
        (HermiteParams::EvenOdd { m: 2, n: 1, j: 3, lambda: 2.0, w: 0.5, z: 2.0 }, "SPECIAL-91"),
        (HermiteParams::EvenEven { m: 2, n: 3, j: 1, lambda: 2.0, w: -0.5, z: 0.8 }, "SPECIAL-92"),
    ];
    for (h, tag) in cases {
        let r = hermite_gordon(&h, &c).unwrap();
        assert_eq!(r.strategy.tag(), tag);
        let want = hermite_reference(&h, &c);
        assert!(rel(r.value, want) < 1e-11, "{tag}: {} vs {want}", r.value);
    }
}

#[test]
fn hermite_anchors() {
    let c = ctrl();
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let at = |n, lambda| HermiteParams::LaguerreEven { n, m: n, j: 0, p: 0, sign: Sign::Plus, lambda, w: lambda, z: lambda };
    assert!((hermite_gordon(&at(0, 4.0), &c).unwrap().value - sqrt_pi / 2.0).abs() < 1e-12);
    assert!(rel(hermite_gordon(&at(1, 1.0), &c).unwrap().value, -2.0 * sqrt_pi) < 1e-14);
    let ee = HermiteParams::EvenEven { m: 0, n: 0, j: 0, lambda: 1.0, w: 0.3, z: 0.2 };
    assert!(rel(hermite_gordon(&ee, &c).unwrap().value, sqrt_pi) < 1e-14);
    let bad = HermiteParams::EvenOdd { m: 0, n: 0, j: 0, lambda: 1.0, w: 0.3, z: -0.2 };
    assert!(matches!(hermite_gordon(&bad, &c), Err(Error::Domain(_))));
}

#[test]
fn limit_identities() {
    let c = ctrl();
    let r = check_limit_identity(&LimitIdentity::SoftenedCondition { n: 1, j: 1.0, c: 1.0 }, 1e-12, &c);
    assert!(r.pass && (r.lhs - 3.0).abs() < 1e-14 && r.abs_residual == 0.0);
    // integer j below n sits on the removable singularity
    let r = check_limit_identity(&LimitIdentity::SoftenedCondition { n: 3, j: 1.0, c: 1.7 }, 1e-6, &c);
    assert!(r.pass, "{r:?}");
    let r = check_limit_identity(
        &LimitIdentity::SumBridge { n: 1, m: 1, c: 1.3, p: 1, sign: Sign::Plus, j: 2.0, x: 0.4 },
        1e-12,
        &c,
    );
    assert!(r.pass, "{r:?}");
    for n in 0..=4 {
        for (p, sign) in [(0, Sign::Plus), (1, Sign::Plus), (1, Sign::Minus), (2, Sign::Plus)] {
            let r = check_limit_identity(&LimitIdentity::HalfIntegerLimit { n, p, sign }, 1e-6, &c);
            assert!(r.pass, "{r:?}");
        }
    }
    let r = check_limit_identity(&LimitIdentity::HalfIntegerLimit { n: 1, p: 1, sign: Sign::Plus }, 1e-6, &c);
    assert!((r.rhs - 1.0 / 3.0).abs() < 1e-15);
    for n in 0..=4 {
        for m in 0..=4 {
            let r = check_limit_identity(&LimitIdentity::OrthogonalityLimit { n, m, c: 1.7 }, 1e-6, &c);
            assert!(r.pass, "{r:?}");
        }
    }
}

#[test]
fn reflection_ratio() {
    let c = ctrl();
    for n in 0..=6 {
        for j in [1, 2] {
            let r = reflection_ratio_check(n, j, 3.6, 2.0, 1e-11, &c);
            assert!(r.pass, "{r:?}");
        }
    }
    assert_eq!(reflection_ratio_check(1, 3, 3.6, 2.0, 1e-11, &c).status, Status::Inapplicable);
}

#[test]
fn polynomial_routes_reach_eval_auto() {
    let c = ctrl();
    let g = deg(1, 1, 1.0, 1, 0, 1.0, 1.0, 1.0).base();
    let r = crate::gordon::eval_auto(&g, &c).unwrap();
    assert!((r.value - 3.0).abs() < 1e-12);
}
