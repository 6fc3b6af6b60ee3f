//! Acceptance criteria 1–10, one line each. Runs without the libtest
//! harness so the lines are always printed.

use std::process::{Command, ExitCode};
use std::time::Instant;

use gordon_core::gordon::{eval_2f1_double_sum, eval_f1_sum, eval_f2_series};
use gordon_core::identities::{orthogonality_suite, run_identity_suite};
use gordon_core::poly::{hermite_gordon, HermiteParams};
use gordon_core::quadrature::integrate_gordon;
use gordon_core::relations::{sweep_recurrences, Lattice, RecurrenceId, RECURRENCE_TOL};
use gordon_core::report::{rel_residual, Status};
use gordon_core::special::gamma;
use gordon_core::{eval_auto, GordonParams, SeriesControl, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ctrl() -> SeriesControl {
    SeriesControl::default()
}

fn gp(b: f64, bp: f64, c: f64, j: i64, q: i64, lambda: f64, w: f64, z: f64) -> GordonParams {
    GordonParams {
        b,
        b_prime: bp,
        c,
        j,
        p: q.unsigned_abs() as u32,
        sign: if q < 0 { Sign::Minus } else { Sign::Plus },
        lambda,
        w,
        z,
    }
}

fn gamma_baseline() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let e: f64 = rng.random_range(0.5..=20.0);
        let j = rng.random_range(0..=3i64).min((e - 0.1).floor() as i64);
        let lambda = rng.random_range(0.1..=10.0);
        let g = gp(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0), e - j as f64, j, 0, lambda, 0.0, 0.0);
        let v = eval_auto(&g, &ctrl()).map_err(|err| format!("{g:?}: {err}"))?.value;
        let want = gamma(e).unwrap() / lambda.powf(e);
        worst = worst.max(rel_residual(v, want));
    }
    if worst <= 1e-12 {
        Ok(format!("50 points, worst rel {worst:.1e}"))
    } else {
        Err(format!("worst rel {worst:.1e} > 1e-12"))
    }
}

fn single_factor_closed_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut worst, mut worst_oracle) = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let bp = rng.random_range(0.1..3.0);
        let c = rng.random_range(0.3..4.0);
        let lambda = rng.random_range(0.5..5.0);
        let z = lambda * rng.random_range(-0.95..0.95);
        let g = gp(rng.random_range(0.1..2.0), bp, c, 0, 0, lambda, 0.0, z);
        let want = lambda.powf(bp - c) * gamma(c).unwrap() / (lambda - z).powf(bp);
        let r = eval_auto(&g, &ctrl()).map_err(|e| format!("{g:?}: {e}"))?;
        if r.strategy.tag() != "SPECIAL-39" {
            return Err(format!("{g:?} dispatched to {}", r.strategy));
        }
        worst = worst.max(rel_residual(r.value, want));
        let q = integrate_gordon(&g, 1e-10).map_err(|e| format!("oracle {g:?}: {e}"))?;
        worst_oracle = worst_oracle.max(rel_residual(q.value, want));
    }
    if worst <= 1e-10 && worst_oracle <= 1e-8 {
        Ok(format!("50 points, worst rel {worst:.1e}, oracle {worst_oracle:.1e}"))
    } else {
        Err(format!("worst rel {worst:.1e} (1e-10), oracle {worst_oracle:.1e} (1e-8)"))
    }
}

/// 200 points with j ≥ p ≥ 0 and |w| + |z| ≤ 0.8λ.
fn convergent_points() -> Vec<GordonParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut out = Vec::new();
    while out.len() < 200 {
        let j = rng.random_range(0..=4i64);
        let p = rng.random_range(0..=j);
        let q = if rng.random_bool(0.5) { p } else { -p };
        let c = rng.random_range(0.3..4.0);
        let c2 = c + q as f64;
        if c2 <= 0.0 && (c2 - c2.round()).abs() < 0.05 {
            continue;
        }
        let lambda = rng.random_range(0.5..5.0);
        let wf: f64 = rng.random_range(-0.8..0.8);
        let zf = rng.random_range(-1.0..1.0) * (0.8 - wf.abs());
        out.push(gp(rng.random_range(0.1..2.5), rng.random_range(0.1..2.5), c, j, q, lambda, wf * lambda, zf * lambda));
    }
    out
}

fn cross_strategy(points: &[GordonParams]) -> Outcome {
    let (mut worst, mut worst_warned, mut warned) = (0.0f64, 0.0f64, 0);
    for g in points {
        let rs = [eval_f2_series(g, &ctrl()), eval_f1_sum(g, &ctrl()), eval_2f1_double_sum(g, &ctrl())];
        let rs: Vec<_> = rs.into_iter().collect::<Result<_, _>>().map_err(|e| format!("{g:?}: {e}"))?;
        let spread = rs
            .iter()
            .flat_map(|a| rs.iter().map(move |b| rel_residual(a.value, b.value)))
            .fold(0.0, f64::max);
        if rs.iter().any(|r| r.has_cancellation_warning()) {
            warned += 1;
            worst_warned = worst_warned.max(spread);
        } else {
            worst = worst.max(spread);
        }
    }
    if worst <= 1e-9 && worst_warned <= 1e-7 {
        Ok(format!("200 points, worst pairwise rel {worst:.1e}; {warned} under cancellation, worst {worst_warned:.1e}"))
    } else {
        Err(format!("worst {worst:.1e} (1e-9), under cancellation {worst_warned:.1e} (1e-7)"))
    }
}

fn oracle_agreement(points: &[GordonParams]) -> Outcome {
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for g in points {
        let v = eval_auto(g, &ctrl()).map_err(|e| format!("{g:?}: {e}"))?.value;
        let q = integrate_gordon(g, 1e-10).map_err(|e| format!("oracle {g:?}: {e}"))?;
        let diff = (v - q.value).abs();
        worst = worst.max(rel_residual(v, q.value));
        if diff > (1e-7 * v.abs()).max(1e-12) {
            bad.push(format!("{g:?}: {v} vs {}", q.value));
        }
    }
    if bad.is_empty() {
        Ok(format!("200 points, worst rel {worst:.1e}"))
    } else {
        Err(format!("{} points outside max(rel 1e-7, abs 1e-12), first {}", bad.len(), bad[0]))
    }
}

fn orthogonality() -> Outcome {
    let reports = orthogonality_suite(10, &ctrl());
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    if failed.is_empty() {
        Ok(format!("{} pairs (n, m ≤ 10) over both polynomial families", reports.len()))
    } else {
        Err(format!("{} failures, first {:?}", failed.len(), failed[0]))
    }
}

fn anchors() -> Outcome {
    let degree_one = eval_auto(&gp(-1.0, -1.0, 1.0, 1, 0, 1.0, 1.0, 1.0), &ctrl()).map_err(|e| e.to_string())?;
    let moment = eval_auto(&gp(0.0, -1.0, 1.0, 1, 0, 1.0, 0.0, 1.0), &ctrl()).map_err(|e| e.to_string())?;
    let h = HermiteParams::LaguerreEven { n: 0, m: 0, j: 0, p: 0, sign: Sign::Plus, lambda: 4.0, w: 4.0, z: 4.0 };
    let hermite = hermite_gordon(&h, &ctrl()).map_err(|e| e.to_string())?;
    let checks = [
        (degree_one.value, 3.0, degree_one.strategy.tag()),
        (moment.value, -1.0, moment.strategy.tag()),
        (hermite.value, std::f64::consts::PI.sqrt() / 2.0, hermite.strategy.tag()),
    ];
    let text: Vec<String> = checks.iter().map(|(v, _, t)| format!("{t}={v}")).collect();
    if checks.iter().all(|(v, w, _)| (v - w).abs() <= 1e-12) {
        Ok(text.join(", "))
    } else {
        Err(text.join(", "))
    }
}

fn vanishing() -> Outcome {
    let mut combos = Vec::new();
    'outer: for n in 1..=5u32 {
        for j in 0..=4i64 {
            for q in -2..=2i64 {
                let k = j - q;
                if k >= 0 && k < n as i64 {
                    combos.push((n, j, q));
                    if combos.len() == 20 {
                        break 'outer;
                    }
                }
            }
        }
    }
    for (i, &(n, j, q)) in combos.iter().enumerate() {
        let c = [0.5, 1.7, 2.9][i % 3];
        let lambda = [0.5, 2.0, 3.0][i % 3];
        let g = gp(0.0, -(n as f64), c, j, q, lambda, 0.0, lambda);
        let r = eval_auto(&g, &ctrl()).map_err(|e| format!("{g:?}: {e}"))?;
        if r.value != 0.0 {
            return Err(format!("n={n}, j={j}, q={q}: {} by {}", r.value, r.strategy));
        }
    }
    Ok(format!("{} combinations with 0 ≤ j−q < n give exactly 0", combos.len()))
}

const IDENTITY_IDS: [&str; 12] = [
    "f1-pfaff",
    "1f1-lower-numerator",
    "1f1-raise-pair",
    "1f1-raise-pair-lowered-denominators",
    "1f1-raise-numerator",
    "1f1-lower-pair",
    "f2-opposite-args",
    "f2-equal-args",
    "f2-raise-second-denominator",
    "f2-lower-second-denominator",
    "softened-unit-3f2",
    "2f1-sum-to-3f2",
];

fn identity_suites() -> Outcome {
    let reports = run_identity_suite(7, 25, &ctrl());
    for id in IDENTITY_IDS.iter().chain(&["half-integer-limit"]) {
        let mine: Vec<_> = reports.iter().filter(|r| r.id == *id).collect();
        let passed = mine.iter().filter(|r| r.pass).count();
        if passed < 25 || passed < mine.len() {
            return Err(format!("{id}: {passed}/{} pass", mine.len()));
        }
    }
    let corrected = reports.iter().filter(|r| r.status == Status::Corrected).count();
    Ok(format!("12 identities × 25 points and 25 limit checks pass ({corrected} via corrected forms)"))
}

fn recurrence_lattice() -> Outcome {
    let reports = sweep_recurrences(&Lattice::default_81(), &ctrl(), RECURRENCE_TOL);
    if let Some(r) = reports.iter().find(|r| r.status == Status::Failed) {
        return Err(format!("unmarked failure {} at {:?}", r.id, r.point));
    }
    let mut lines = Vec::new();
    for label in ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8"] {
        let id = RecurrenceId::from_label(label).unwrap();
        let valid: Vec<_> = reports.iter().filter(|r| r.id == label && r.status != Status::Inapplicable).collect();
        let passed = valid.iter().filter(|r| r.pass).count();
        if label != "A8" && (passed as f64) < 0.95 * valid.len() as f64 {
            return Err(format!("{label}: {passed}/{} pass", valid.len()));
        }
        if label == "A8" {
            let printed = reports.iter().filter(|r| r.id.starts_with("A8:printed") && r.status == Status::FailedAsPrinted);
            if passed < valid.len() || printed.count() == 0 {
                return Err(format!("A8: {passed}/{} pass and printed readings not marked", valid.len()));
            }
        }
        let mark = if id.corrected() { "corrected" } else { "pass" };
        lines.push(format!("{label} {passed}/{} {mark}", valid.len()));
    }
    Ok(lines.join(", ") + "; printed A8 readings failed-as-printed")
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_gordon"))
            .args(["verify", "--scope", "all", "--seed", "7"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() {
        return Err(format!("verify exited with {}", a.status));
    }
    if a.stdout == b.stdout && !a.stdout.is_empty() {
        Ok(format!("{} bytes identical", a.stdout.len()))
    } else {
        Err("outputs differ".into())
    }
}

fn main() -> ExitCode {
    let points = convergent_points();
    let criteria: [(&str, Box<dyn Fn() -> Outcome>); 10] = [
        ("gamma baseline", Box::new(gamma_baseline)),
        ("single-factor closed form", Box::new(single_factor_closed_form)),
        ("cross-strategy agreement", Box::new(|| cross_strategy(&points))),
        ("oracle agreement", Box::new(|| oracle_agreement(&points))),
        ("orthogonality", Box::new(orthogonality)),
        ("hand-checked anchors", Box::new(anchors)),
        ("vanishing branches", Box::new(vanishing)),
        ("identity suites", Box::new(identity_suites)),
        ("recurrence lattice", Box::new(recurrence_lattice)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
