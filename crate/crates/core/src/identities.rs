//! Executable identity catalog: each identity samples valid points from a
//! seeded generator and compares both sides.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::appell::{
    appell_f1, appell_f1_pfaff, appell_f2_double, f2_contiguous_shift, f2_reduce_equal_args, f2_reduce_opposite_args,
    AppellF1Params, AppellF2Params, ShiftDirection,
};
use crate::error::Result;
use crate::gordon::Sign;
use crate::poly::{
    check_limit_identity, double_polynomial, double_polynomial_by_second, laguerre_gordon, poly_gordon,
    reflection_ratio_check, LaguerreParams, LimitIdentity, PolyGordonParams, WFactor,
};
use crate::report::{point, IdentityReport};
use crate::series::SeriesControl;
use crate::special::{binomial, factorial, gamma, hyp1f1, pochhammer};

/// Relative tolerance of the random identity suites.
pub const IDENTITY_TOL: f64 = 1e-9;
/// Tolerance of checks that extrapolate a limit.
pub const LIMIT_TOL: f64 = 1e-6;
/// Relative tolerance of the orthogonality suites.
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

/// Largest Σ|terms| / |sum| accepted at a sampled point.
const MAX_AMPLIFICATION: f64 = 1e4;

type Check = fn(&mut ChaCha8Rng, &SeriesControl) -> IdentityReport;

/// One randomized identity.
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    /// How the checked form corrects the printed one, if it does.
    pub corrected: Option<&'static str>,
    check: Check,
}

pub static IDENTITIES: &[IdentitySpec] = &[
    IdentitySpec {
        id: "f1-pfaff",
        description: "F1(a;b,b';c;w,z) = (1-w)^-a F1(a;c-b-b',b';c;w/(w-1),(z-w)/(1-w))",
        corrected: None,
        check: f1_pfaff,
    },
    IdentitySpec {
        id: "1f1-lower-numerator",
        description: "sum C(n,k)(-x)^k/(b)_k 1F1(a;b+k;x) = 1F1(a-n;b;x)",
        corrected: None,
        check: lower_numerator,
    },
    IdentitySpec {
        id: "1f1-raise-pair",
        description: "sum (-1)^k C(n,k)(b-a)_k/(b)_k 1F1(a;b+k;x) = (a)_n/(b)_n 1F1(a+n;b+n;x)",
        corrected: None,
        check: raise_pair,
    },
    IdentitySpec {
        id: "1f1-raise-pair-lowered-denominators",
        description: "1F1(a+n;c+n;x) = (c-1)_n(c)_n/((a)_n(-x)^n) sum (-n)_k(1-c)_k/((2-c-n)_k k!) 1F1(a;c-k;x)",
        corrected: None,
        check: raise_pair_lowered,
    },
    IdentitySpec {
        id: "1f1-raise-numerator",
        description: "1F1(a+n;c;x) = (a-c+1)_n/(a)_n sum (-1)^k C(n,k)(1-c)_k/(a-c+1)_k 1F1(a;c-k;x)",
        corrected: None,
        check: raise_numerator,
    },
    IdentitySpec {
        id: "1f1-lower-pair",
        description: "1F1(a-n;c-n;x) = x^n/(1-c)_n sum C(n,k)(1-c)_k x^-k 1F1(a;c-k;x)",
        corrected: None,
        check: lower_pair,
    },
    IdentitySpec {
        id: "f2-opposite-args",
        description: "F2(a;b,b;c,c;z,-z) = 4F3(a/2,(a+1)/2,b,c-b;c/2,(c+1)/2,c;z^2)",
        corrected: Some("lower parameter (c+1)/2 replaces the printed (c+2)/2"),
        check: opposite_args,
    },
    IdentitySpec {
        id: "f2-equal-args",
        description: "F2(a;b,c-b;c,c;z,z) = (1-z)^-a 4F3(...;z^2/(1-z)^2)",
        corrected: Some("lower parameter (c+1)/2 replaces the printed (c+2)/2"),
        check: equal_args,
    },
    IdentitySpec {
        id: "f2-raise-second-denominator",
        description: "F2 with c'+n as a finite combination of F2(b'+k;c'+k)",
        corrected: None,
        check: raise_second,
    },
    IdentitySpec {
        id: "f2-lower-second-denominator",
        description: "F2 with c'-n as a finite combination of F2(a+k;b'+k;c'+k)",
        corrected: None,
        check: lower_second,
    },
    IdentitySpec {
        id: "softened-unit-3f2",
        description: "(-j)_n 3F2(-n,c+j,1+j;c,1+j-n;1) = n! 3F2(-n,-j,1+j;c,1;1)",
        corrected: None,
        check: softened,
    },
    IdentitySpec {
        id: "2f1-sum-to-3f2",
        description: "sum (-n)_k(c+j)_k/((c+q)_k k!) 2F1(-m,c+j+k;c;x) = (q-j)_n/(c+q)_n 3F2(-m,c+j,1+j-q;c,1+j-n-q;x)",
        corrected: None,
        check: sum_bridge,
    },
    IdentitySpec {
        id: "double-polynomial-orderings",
        description: "the two finite double-polynomial sums of the integral agree",
        corrected: None,
        check: orderings,
    },
];

/// Deterministic generator for identity `index` under `seed`.
fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Run every randomized identity at `points` points each, plus the
/// deterministic limit and reflection checks. Output order is fixed.
pub fn run_identity_suite(seed: u64, points: usize, ctrl: &SeriesControl) -> Vec<IdentityReport> {
    let mut out: Vec<IdentityReport> = IDENTITIES
        .par_iter()
        .enumerate()
        .map(|(i, spec)| {
            let mut rng = rng_for(seed, i);
            (0..points)
                .map(|_| {
                    let r = (spec.check)(&mut rng, ctrl);
                    match spec.corrected {
                        Some(note) => r.mark_corrected().with_note(note),
                        None => r,
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    out.extend(limit_suite(ctrl));
    out
}

/// The j → 0 limits for n ≤ 4 and the reflection ratio for n ≤ 6.
pub fn limit_suite(ctrl: &SeriesControl) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 0..=4 {
        for (p, sign) in [(0, Sign::Plus), (1, Sign::Plus), (1, Sign::Minus), (2, Sign::Plus), (2, Sign::Minus)] {
            out.push(check_limit_identity(&LimitIdentity::HalfIntegerLimit { n, p, sign }, LIMIT_TOL, ctrl));
        }
    }
    for n in 0..=4 {
        for m in 0..=4 {
            out.push(check_limit_identity(&LimitIdentity::OrthogonalityLimit { n, m, c: 1.7 }, LIMIT_TOL, ctrl));
        }
    }
    for n in 0..=6 {
        for j in [0, 1, 2] {
            out.push(reflection_ratio_check(n, j, 3.6, 2.0, IDENTITY_TOL, ctrl));
        }
    }
    out
}

/// Orthogonality of the polynomial factors at w = z = λ, j = 0, for degrees
/// up to `max_degree`, over c ∈ {0.5, 1, 2.5} and λ ∈ {0.5, 1, 3}.
/// Off-diagonal values pass when below 1e-12 of the diagonal scale.
pub fn orthogonality_suite(max_degree: u32, ctrl: &SeriesControl) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for &c in &[0.5, 1.0, 2.5] {
        for &lam in &[0.5, 1.0, 3.0] {
            for m in 0..=max_degree {
                for n in 0..=max_degree {
                    out.push(confluent_orthogonality(m, n, c, lam, ctrl));
                    out.push(laguerre_orthogonality(m, n, c, lam, ctrl));
                }
            }
        }
    }
    out
}

fn confluent_orthogonality(m: u32, n: u32, c: f64, lam: f64, ctrl: &SeriesControl) -> IdentityReport {
    let pt = point(&[("m", m as f64), ("n", n as f64), ("c", c), ("lambda", lam)]);
    let run = || -> Result<(f64, f64)> {
        let p = PolyGordonParams::degrees(m, n, c, 0, 0, Sign::Plus, lam, lam, lam);
        let v = poly_gordon(&p, ctrl)?.value;
        let scale = gamma(c)? / lam.powf(c) * factorial(n as u64) / pochhammer(c, n as u64);
        Ok((v, scale))
    };
    match run() {
        Ok((v, scale)) => {
            let want = if m == n { scale } else { 0.0 };
            IdentityReport::compare("confluent-orthogonality", pt, v, want, ORTHOGONALITY_TOL, ORTHOGONALITY_TOL * scale)
        }
        Err(e) => IdentityReport::inapplicable("confluent-orthogonality", pt, e.to_string()),
    }
}

fn laguerre_orthogonality(m: u32, n: u32, c: f64, lam: f64, ctrl: &SeriesControl) -> IdentityReport {
    let pt = point(&[("m", m as f64), ("n", n as f64), ("c", c), ("lambda", lam)]);
    let run = || -> Result<(f64, f64)> {
        let p = LaguerreParams {
            n,
            w_factor: WFactor::Laguerre(m),
            c,
            j: 0,
            p: 0,
            sign: Sign::Plus,
            lambda: lam,
            w: lam,
            z: lam,
            s: 0,
            mu: 0,
        };
        let v = laguerre_gordon(&p, ctrl)?.value;
        let scale = pochhammer(c, n as u64) * gamma(c)? / (factorial(n as u64) * lam.powf(c));
        Ok((v, scale))
    };
    match run() {
        Ok((v, scale)) => {
            let want = if m == n { scale } else { 0.0 };
            IdentityReport::compare("laguerre-orthogonality", pt, v, want, ORTHOGONALITY_TOL, ORTHOGONALITY_TOL * scale)
        }
        Err(e) => IdentityReport::inapplicable("laguerre-orthogonality", pt, e.to_string()),
    }
}

// ---- randomized checks ----

fn report(id: &str, pt: Vec<(String, f64)>, sides: Result<(f64, f64)>) -> IdentityReport {
    match sides {
        Ok((l, r)) => IdentityReport::compare(id, pt, l, r, IDENTITY_TOL, 0.0),
        Err(e) => IdentityReport::inapplicable(id, pt, e.to_string()),
    }
}

/// Draw points until one is well conditioned (amplification at most
/// `MAX_AMPLIFICATION`), giving up after 64 draws.
fn resampled(
    id: &str,
    rng: &mut ChaCha8Rng,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> (Vec<(String, f64)>, Result<(f64, f64, f64)>),
) -> IdentityReport {
    let mut last = None;
    for _ in 0..64 {
        let (pt, sides) = draw(rng);
        let done = !matches!(sides, Ok((_, _, amp)) if amp > MAX_AMPLIFICATION);
        last = Some((pt, sides.map(|(l, r, _)| (l, r))));
        if done {
            break;
        }
    }
    let (pt, sides) = last.expect("at least one draw");
    report(id, pt, sides)
}

fn f1_pfaff(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    // resample until the transformed arguments converge
    let p = loop {
        let p = AppellF1Params {
            a: rng.random_range(0.2..2.5),
            b: rng.random_range(0.1..1.5),
            b_prime: rng.random_range(0.1..1.5),
            c: rng.random_range(0.5..3.5),
            w: rng.random_range(-0.45..0.45),
            z: rng.random_range(-0.45..0.45),
        };
        let (tw, tz) = (p.w / (p.w - 1.0), (p.z - p.w) / (1.0 - p.w));
        if tw.abs() < 0.8 && tz.abs() < 0.8 {
            break p;
        }
    };
    let pt = point(&[("a", p.a), ("b", p.b), ("b'", p.b_prime), ("c", p.c), ("w", p.w), ("z", p.z)]);
    report("f1-pfaff", pt, (|| Ok((appell_f1(&p, ctrl)?.value, appell_f1_pfaff(&p, ctrl)?.value)))())
}

fn f(a: f64, c: f64, x: f64, ctrl: &SeriesControl) -> Result<f64> {
    Ok(hyp1f1(a, c, x, ctrl)?.value)
}

fn sample_1f1(rng: &mut ChaCha8Rng, max_n: u32) -> (u32, f64, f64, f64) {
    let n = rng.random_range(0..=max_n);
    // (a)_n divides some forms; keep a off the integers
    let a = loop {
        let a: f64 = rng.random_range(-2.5..2.5);
        if (a - a.round()).abs() > 0.1 {
            break a;
        }
    };
    let x = rng.random_range(0.2..3.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
    (n, a, rng.random_range(0.5..3.5), x)
}

fn pt_1f1(n: u32, a: f64, c: f64, x: f64) -> Vec<(String, f64)> {
    point(&[("n", n as f64), ("a", a), ("c", c), ("x", x)])
}

fn lower_numerator(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let (n, a, b, x) = sample_1f1(rng, 6);
    let sides = (|| {
        let mut lhs = 0.0;
        for k in 0..=n as u64 {
            lhs += binomial(n as u64, k) * (-x).powi(k as i32) / pochhammer(b, k) * f(a, b + k as f64, x, ctrl)?;
        }
        Ok((lhs, f(a - n as f64, b, x, ctrl)?))
    })();
    report("1f1-lower-numerator", pt_1f1(n, a, b, x), sides)
}

fn raise_pair(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let (n, a, b, x) = sample_1f1(rng, 5);
    let sides = (|| {
        let mut lhs = 0.0;
        for k in 0..=n as u64 {
            let s = if k % 2 == 0 { 1.0 } else { -1.0 };
            lhs += s * binomial(n as u64, k) * pochhammer(b - a, k) / pochhammer(b, k) * f(a, b + k as f64, x, ctrl)?;
        }
        let nn = n as u64;
        Ok((lhs, pochhammer(a, nn) / pochhammer(b, nn) * f(a + n as f64, b + n as f64, x, ctrl)?))
    })();
    report("1f1-raise-pair", pt_1f1(n, a, b, x), sides)
}

fn raise_pair_lowered(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    resampled("1f1-raise-pair-lowered-denominators", rng, |rng| {
        let (n, a, _, x) = sample_1f1(rng, 5);
        // c − k must stay off the poles for k ≤ n
        let c = n as f64 + rng.random_range(0.5..3.0);
        let sides = (|| {
            let nn = n as u64;
            let mut sum = 0.0;
            let mut abs_sum = 0.0;
            let mut t = 1.0; // (−n)_k(1−c)_k/((2−c−n)_k k!)
            for k in 0..=nn {
                let kf = k as f64;
                let term = t * f(a, c - kf, x, ctrl)?;
                sum += term;
                abs_sum += term.abs();
                t *= (kf - n as f64) * (1.0 - c + kf) / ((2.0 - c - n as f64 + kf) * (kf + 1.0));
            }
            let pre = pochhammer(c - 1.0, nn) * pochhammer(c, nn) / (pochhammer(a, nn) * (-x).powi(n as i32));
            Ok((f(a + n as f64, c + n as f64, x, ctrl)?, pre * sum, abs_sum / sum.abs()))
        })();
        (pt_1f1(n, a, c, x), sides)
    })
}

fn raise_numerator(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let (n, a, _, x) = sample_1f1(rng, 5);
    let c = n as f64 + rng.random_range(0.5..3.0);
    let sides = (|| {
        let nn = n as u64;
        let mut sum = 0.0;
        for k in 0..=nn {
            let s = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum += s * binomial(nn, k) * pochhammer(1.0 - c, k) / pochhammer(a - c + 1.0, k) * f(a, c - k as f64, x, ctrl)?;
        }
        Ok((f(a + n as f64, c, x, ctrl)?, pochhammer(a - c + 1.0, nn) / pochhammer(a, nn) * sum))
    })();
    report("1f1-raise-numerator", pt_1f1(n, a, c, x), sides)
}

fn lower_pair(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let (n, a, _, x) = sample_1f1(rng, 5);
    let c = n as f64 + rng.random_range(0.5..3.0);
    let sides = (|| {
        let nn = n as u64;
        let mut sum = 0.0;
        for k in 0..=nn {
            sum += binomial(nn, k) * pochhammer(1.0 - c, k) / x.powi(k as i32) * f(a, c - k as f64, x, ctrl)?;
        }
        Ok((f(a - n as f64, c - n as f64, x, ctrl)?, x.powi(n as i32) / pochhammer(1.0 - c, nn) * sum))
    })();
    report("1f1-lower-pair", pt_1f1(n, a, c, x), sides)
}

fn opposite_args(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let (a, b, c, z) = (
        rng.random_range(0.2..2.5),
        rng.random_range(0.1..2.0),
        rng.random_range(0.5..3.5),
        rng.random_range(-0.4..0.4),
    );
    let pt = point(&[("a", a), ("b", b), ("c", c), ("z", z)]);
    let p = AppellF2Params { a, b, b_prime: b, c, c_prime: c, w: z, z: -z };
    report(
        "f2-opposite-args",
        pt,
        (|| Ok((appell_f2_double(&p, ctrl)?.value, f2_reduce_opposite_args(a, b, c, z, ctrl)?.value)))(),
    )
}

fn equal_args(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let (a, b, c, z) = (
        rng.random_range(0.2..2.5),
        rng.random_range(0.1..2.0),
        rng.random_range(0.5..3.5),
        rng.random_range(-0.4..0.4),
    );
    let pt = point(&[("a", a), ("b", b), ("c", c), ("z", z)]);
    let p = AppellF2Params { a, b, b_prime: c - b, c, c_prime: c, w: z, z };
    report(
        "f2-equal-args",
        pt,
        (|| Ok((appell_f2_double(&p, ctrl)?.value, f2_reduce_equal_args(a, b, c, z, ctrl)?.value)))(),
    )
}

fn sample_f2(rng: &mut ChaCha8Rng) -> AppellF2Params {
    let w = rng.random_range(-0.4..0.4);
    let z = rng.random_range(-0.4..0.4);
    let bp = rng.random_range(0.1..1.5);
    AppellF2Params {
        a: rng.random_range(0.2..2.0),
        b: rng.random_range(0.1..1.5),
        b_prime: bp,
        c: rng.random_range(0.5..3.0),
        c_prime: bp + rng.random_range(0.2..2.0),
        w,
        z,
    }
}

fn pt_f2(n: u32, p: &AppellF2Params) -> Vec<(String, f64)> {
    point(&[
        ("n", n as f64),
        ("a", p.a),
        ("b", p.b),
        ("b'", p.b_prime),
        ("c", p.c),
        ("c'", p.c_prime),
        ("w", p.w),
        ("z", p.z),
    ])
}

fn raise_second(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let n = rng.random_range(0..=4);
    let p = sample_f2(rng);
    let shifted = AppellF2Params { c_prime: p.c_prime + n as f64, ..p };
    report(
        "f2-raise-second-denominator",
        pt_f2(n, &p),
        (|| {
            Ok((
                appell_f2_double(&shifted, ctrl)?.value,
                f2_contiguous_shift(ShiftDirection::Raise, n, &p, ctrl)?.value,
            ))
        })(),
    )
}

fn lower_second(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let n = rng.random_range(0..=4);
    let mut p = sample_f2(rng);
    p.c_prime = n as f64 + rng.random_range(0.3..2.7);
    let shifted = AppellF2Params { c_prime: p.c_prime - n as f64, ..p };
    report(
        "f2-lower-second-denominator",
        pt_f2(n, &p),
        (|| {
            Ok((
                appell_f2_double(&shifted, ctrl)?.value,
                f2_contiguous_shift(ShiftDirection::Lower, n, &p, ctrl)?.value,
            ))
        })(),
    )
}

fn softened(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let which = LimitIdentity::SoftenedCondition {
        n: rng.random_range(0..=5),
        j: rng.random_range(0.1..5.0),
        c: rng.random_range(0.5..3.5),
    };
    check_limit_identity(&which, IDENTITY_TOL, ctrl)
}

fn sum_bridge(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    let which = LimitIdentity::SumBridge {
        n: rng.random_range(0..=5),
        m: rng.random_range(0..=5),
        c: rng.random_range(0.5..3.5),
        p: rng.random_range(0..=2),
        sign: if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus },
        j: rng.random_range(0.1..5.0),
        x: rng.random_range(-0.9..0.9),
    };
    check_limit_identity(&which, IDENTITY_TOL, ctrl)
}

fn orderings(rng: &mut ChaCha8Rng, ctrl: &SeriesControl) -> IdentityReport {
    resampled("double-polynomial-orderings", rng, |rng| {
        let m = rng.random_range(0..=6);
        let n = rng.random_range(0..=6);
        let c = rng.random_range(0.5..3.5);
        let j = rng.random_range(0..=3);
        let p = rng.random_range(0..=2);
        let lam = rng.random_range(0.5..4.0);
        let params = PolyGordonParams::degrees(
            m,
            n,
            c,
            j,
            p,
            Sign::Plus,
            lam,
            lam * rng.random_range(-1.0..1.0),
            lam * rng.random_range(-1.0..1.0),
        );
        let pt = point(&[
            ("m", m as f64),
            ("n", n as f64),
            ("c", c),
            ("j", j as f64),
            ("q", p as f64),
            ("lambda", lam),
            ("w", params.w),
            ("z", params.z),
        ]);
        let sides = (|| {
            let a = double_polynomial(&params, m, ctrl)?;
            let b = double_polynomial_by_second(&params, m, ctrl)?;
            Ok((a.value, b.value, a.cancellation_ratio.max(b.cancellation_ratio)))
        })();
        (pt, sides)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn every_identity_passes_on_random_points() {
        let ctrl = SeriesControl::default();
        let reports = run_identity_suite(7, 30, &ctrl);
        for spec in IDENTITIES {
            let mine: Vec<_> = reports.iter().filter(|r| r.id == spec.id).collect();
            assert_eq!(mine.len(), 30);
            for r in mine {
                assert!(r.pass, "{r:?}");
                if spec.corrected.is_some() {
                    assert_eq!(r.status, Status::Corrected);
                }
            }
        }
        let limits: Vec<_> = reports.iter().filter(|r| r.id == "half-integer-limit").collect();
        assert_eq!(limits.len(), 25);
        assert!(reports.iter().all(|r| r.pass), "{:?}", reports.iter().find(|r| !r.pass));
    }

    #[test]
    fn suite_is_deterministic() {
        let ctrl = SeriesControl::default();
        assert_eq!(run_identity_suite(11, 3, &ctrl), run_identity_suite(11, 3, &ctrl));
        assert_ne!(run_identity_suite(11, 3, &ctrl), run_identity_suite(12, 3, &ctrl));
    }

    #[test]
    fn orthogonality_suites_pass() {
        let ctrl = SeriesControl::default();
        let reports = orthogonality_suite(10, &ctrl);
        assert_eq!(reports.len(), 2 * 9 * 121);
        for r in &reports {
            assert!(r.pass, "{r:?}");
            if r.point[0].1 != r.point[1].1 {
                assert_eq!(r.lhs, 0.0);
            }
        }
    }
}
