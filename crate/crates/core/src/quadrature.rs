//! Quadrature oracle: adaptive Gauss–Kronrod integration of the defining
//! integrand over (0, U], with the cutoff U chosen from an exponential
//! envelope and checked against a fitted tail bound.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gordon::GordonParams;
use crate::result::Warning;
use crate::series::{CompensatedSum, SeriesControl};
use crate::special::{hyp1f1_value, nonpositive_integer};

/// Oracle output. `err_est` covers both the quadrature error and the tail
/// beyond `cutoff`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub err_est: f64,
    pub cutoff: f64,
    pub subdivisions: usize,
    pub integrand_evals: usize,
    /// ∫|f| / |∫f|; large values mean a cancelling integrand.
    pub cancellation_ratio: f64,
    pub warnings: Vec<Warning>,
}

/// Ratio ∫|f|/|∫f| above which the oscillation warning is attached.
pub const OSCILLATION_THRESHOLD: f64 = 10.0;

const MAX_SUBDIVISIONS: usize = 4000;

/// x^{c+j−1} e^{−λx} ₁F₁(b; c; wx) ₁F₁(b'; c+q; zx) at one point.
pub fn integrand(params: &GordonParams, x: f64, ctrl: &SeriesControl) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("integrand needs finite x ≥ 0, got {x}")));
    }
    let e = params.exponent();
    if x == 0.0 {
        return match e {
            e if e > 1.0 => Ok(0.0),
            e if e == 1.0 => Ok(1.0),
            _ => Err(Error::Domain("integrand is singular at x = 0 when c + j < 1".into())),
        };
    }
    let f1 = hyp1f1_value(params.b, params.c, params.w * x, ctrl)?.value;
    let f2 = hyp1f1_value(params.b_prime, params.c2(), params.z * x, ctrl)?.value;
    Ok(f1 * f2 * ((e - 1.0) * x.ln() - params.lambda * x).exp())
}

// 21-point Kronrod rule with its embedded 10-point Gauss rule.
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077632549990868,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    abs_value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.err.total_cmp(&o.err) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

/// Integrand after the optional power substitution x = u^k on the first
/// panel, which removes the x^{c+j−1} endpoint singularity when c+j < 1.
struct Mapped<'a> {
    f: &'a dyn Fn(f64) -> Result<f64>,
    evals: usize,
}

impl Mapped<'_> {
    fn call(&mut self, x: f64) -> Result<f64> {
        self.evals += 1;
        (self.f)(x)
    }
}

fn gk21(g: &mut Mapped<'_>, a: f64, b: f64, power: Option<f64>) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut eval = |t: f64| -> Result<f64> {
        match power {
            // x = u^k, dx = k u^{k−1} du
            Some(k) => Ok(g.call(t.powf(k))? * k * t.powf(k - 1.0)),
            None => g.call(t),
        }
    };
    let fc = eval(center)?;
    let mut kron = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut abs = WGK[10] * fc.abs();
    for i in 0..10 {
        let dx = half * XGK[i];
        let (f1, f2) = (eval(center - dx)?, eval(center + dx)?);
        kron += WGK[i] * (f1 + f2);
        abs += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    let value = kron * half;
    let abs_value = abs * half.abs();
    let err = ((kron - gauss) * half).abs() + 50.0 * f64::EPSILON * abs_value;
    if !value.is_finite() {
        return Err(Error::Domain(format!("non-finite integrand on ({a}, {b})")));
    }
    Ok(Panel { a, b, value, abs_value, err })
}

/// Growth envelope of the integrand for large x: |f| ≲ A x^P e^{−κx}.
/// Returns (P, κ); κ ≤ 0 means no decaying envelope exists.
fn envelope(p: &GordonParams) -> (f64, f64) {
    let mut power = p.exponent() - 1.0;
    let mut kappa = p.lambda;
    for (num, den, arg) in [(p.b, p.c, p.w), (p.b_prime, p.c2(), p.z)] {
        if arg == 0.0 || num == 0.0 {
            continue;
        }
        match nonpositive_integer(num) {
            Some(deg) => power += deg as f64,
            None => {
                kappa -= arg.max(0.0);
                // ₁F₁(b;c;t) ~ t^{b−c} e^t as t → +∞ and ~ |t|^{−b} as t → −∞
                power += if arg > 0.0 { (num - den).max(0.0) } else { (-num).max(0.0) };
            }
        }
    }
    (power, kappa)
}

/// Smallest x ≥ x0 with P ln x − κ x ≤ ln(target), by bisection.
fn solve_cutoff(power: f64, kappa: f64, target: f64, x0: f64) -> f64 {
    let g = |x: f64| power * x.ln() - kappa * x - target.ln();
    let mut lo = x0.max(power.max(1.0) / kappa);
    if g(lo) <= 0.0 {
        return lo;
    }
    let mut hi = 2.0 * lo;
    while g(hi) > 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-12 * hi {
            break;
        }
    }
    hi
}

/// Integrate the Gordon integrand over (0, ∞) to relative accuracy
/// `target_rel_tol` (≥ 1e-12).
pub fn integrate_gordon(params: &GordonParams, target_rel_tol: f64) -> Result<QuadratureResult> {
    if !(target_rel_tol >= 1e-12) {
        return Err(Error::Precondition(format!("target_rel_tol = {target_rel_tol} must be ≥ 1e-12")));
    }
    params.check()?;
    let (power, kappa) = envelope(params);
    if kappa <= 0.0 {
        return Err(Error::Domain(format!(
            "integrand does not decay: λ − w₊ − z₊ = {kappa} on the non-terminating factors"
        )));
    }
    let ctrl = SeriesControl::default();
    let f = |x: f64| integrand(params, x, &ctrl);
    let mut g = Mapped { f: &f, evals: 0 };
    let e = params.exponent();

    // scale of the integral used to set the tail target
    let scale = crate::special::ln_gamma(e).map(|l| (l - e * params.lambda.ln()).exp()).unwrap_or(1.0);
    let mut cutoff = solve_cutoff(power, kappa, 1e-3 * target_rel_tol * scale.min(1.0), 1.0 / params.lambda);

    let first_power = if e < 1.0 { Some(1.0 / e) } else { None };
    let mut heap = BinaryHeap::new();
    let mut covered: f64 = 0.0;
    let mut subdivisions = 0usize;

    // panels geometrically graded towards x = 0
    let extend = |heap: &mut BinaryHeap<Panel>, g: &mut Mapped<'_>, from: f64, to: f64| -> Result<()> {
        let mut edges = Vec::new();
        if from == 0.0 {
            edges.push(0.0);
            for k in (0..=10).rev() {
                edges.push(to / 2f64.powi(k));
            }
        } else {
            let pieces = ((to - from) / (to / 8.0)).ceil().max(1.0) as usize;
            for i in 0..=pieces {
                edges.push(from + (to - from) * i as f64 / pieces as f64);
            }
        }
        for w in edges.windows(2) {
            let panel = if w[0] == 0.0 {
                match first_power {
                    // integrate in u over (0, b^{1/k}]
                    Some(k) => Panel { a: 0.0, b: w[1], ..gk21(g, 0.0, w[1].powf(1.0 / k), Some(k))? },
                    None => gk21(g, w[0], w[1], None)?,
                }
            } else {
                gk21(g, w[0], w[1], None)?
            };
            heap.push(panel);
        }
        Ok(())
    };
    extend(&mut heap, &mut g, 0.0, cutoff)?;
    covered = covered.max(cutoff);

    let totals = |heap: &BinaryHeap<Panel>| {
        let (mut v, mut a, mut r) = (CompensatedSum::new(), 0.0, 0.0);
        for p in heap.iter() {
            v.add(p.value);
            a += p.abs_value;
            r += p.err;
        }
        (v.value(), a, r)
    };

    let mut tail = f64::INFINITY;
    for _round in 0..12 {
        // refine until the quadrature error meets the target
        loop {
            let (value, abs, err) = totals(&heap);
            let goal = (0.1 * target_rel_tol * value.abs()).max(100.0 * f64::EPSILON * abs);
            if err <= goal || subdivisions >= MAX_SUBDIVISIONS {
                break;
            }
            let worst = heap.pop().expect("nonempty panel set");
            let mid = 0.5 * (worst.a + worst.b);
            let (left, right) = if worst.a == 0.0 {
                match first_power {
                    Some(k) => (
                        Panel { a: 0.0, b: mid, ..gk21(&mut g, 0.0, mid.powf(1.0 / k), Some(k))? },
                        Panel {
                            a: mid,
                            b: worst.b,
                            ..gk21(&mut g, mid.powf(1.0 / k), worst.b.powf(1.0 / k), Some(k))?
                        },
                    ),
                    None => (gk21(&mut g, worst.a, mid, None)?, gk21(&mut g, mid, worst.b, None)?),
                }
            } else {
                (gk21(&mut g, worst.a, mid, None)?, gk21(&mut g, mid, worst.b, None)?)
            };
            heap.push(left);
            heap.push(right);
            subdivisions += 1;
        }
        // fitted tail bound beyond the cutoff
        let mut amp: f64 = 0.0;
        for t in [1.0, 1.25, 1.5, 2.0] {
            let x = cutoff * t;
            let fx = g.call(x)?.abs();
            amp = amp.max(fx / (power * x.ln() - kappa * x).exp());
        }
        let decay = kappa - power.max(0.0) / cutoff;
        tail = if decay > 0.0 {
            amp * (power * cutoff.ln() - kappa * cutoff).exp() / decay
        } else {
            f64::INFINITY
        };
        let (value, abs, _) = totals(&heap);
        if tail <= (0.1 * target_rel_tol * value.abs()).max(100.0 * f64::EPSILON * abs) {
            break;
        }
        let next = cutoff * 1.5;
        extend(&mut heap, &mut g, covered, next)?;
        covered = next;
        cutoff = next;
    }

    let (value, abs, err) = totals(&heap);
    let err_est = err + tail;
    let cancellation_ratio = if value != 0.0 { abs / value.abs() } else { f64::INFINITY };
    let mut warnings = Vec::new();
    if cancellation_ratio > OSCILLATION_THRESHOLD {
        warnings.push(Warning::OscillatoryIntegrand(cancellation_ratio));
    }
    let achievable = 100.0 * f64::EPSILON * abs;
    if err_est > (target_rel_tol * value.abs()).max(achievable) {
        return Err(Error::ToleranceNotMet { value, err_est });
    }
    Ok(QuadratureResult {
        value,
        err_est,
        cutoff,
        subdivisions,
        integrand_evals: g.evals,
        cancellation_ratio,
        warnings,
    })
}
