//! Closed forms for special parameter patterns.
//!
//! Every entry pairs a pattern recognizer with an evaluator. Entries are tried
//! on the parameters as given and then on the swapped parameters (the two
//! confluent factors exchanged), which leaves the integral unchanged.

use serde::Serialize;

use crate::appell::{appell_f1, AppellF1Params};
use crate::error::{Error, Result};
use crate::result::{Combination, EvalResult, Strategy};
use crate::series::SeriesControl;
use crate::special::{factorial, hyp2f1, hyp_pfq, nonpositive_integer, pochhammer, real_pow};

use super::params::{GordonParams, Prefactor};
use super::rewrites;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogClass {
    /// Closed forms and finite sums; tried first.
    Exact,
    /// Forms that still contain an infinite series.
    NonTerminating,
    /// Rewrites evaluated only on request or in comparisons.
    Explicit,
}

type Recognizer = fn(&GordonParams) -> bool;
type Evaluator = fn(&GordonParams, &SeriesControl) -> Result<EvalResult>;

pub struct CatalogEntry {
    /// Primary public tag; some entries report a more specific tag for a
    /// sub-pattern (listed in `tags`).
    pub tag: &'static str,
    pub tags: &'static [&'static str],
    pub class: CatalogClass,
    pub description: &'static str,
    pub matches: Recognizer,
    pub eval: Evaluator,
}

fn poly_degree(x: f64) -> Option<u64> {
    nonpositive_integer(x)
}

fn special(tag: &'static str) -> Strategy {
    Strategy::Special(tag)
}

// ---- recognizers ----

fn is_gamma_moment(p: &GordonParams) -> bool {
    p.first_trivial() && p.second_trivial()
}
fn is_single_zero_shift(p: &GordonParams) -> bool {
    p.first_trivial() && p.j == 0 && p.q() == 0
}
fn is_single_matched_shift(p: &GordonParams) -> bool {
    p.first_trivial() && p.q() == p.j
}
fn is_single_poly_at_rate(p: &GordonParams) -> bool {
    p.first_trivial() && poly_degree(p.b_prime).is_some() && p.z == p.lambda
}
fn is_single_poly(p: &GordonParams) -> bool {
    p.first_trivial() && poly_degree(p.b_prime).is_some()
}
fn is_single_euler(p: &GordonParams) -> bool {
    p.first_trivial() && p.j >= p.q()
}
fn is_single_gauss(p: &GordonParams) -> bool {
    p.first_trivial()
}
fn is_first_exponent_matched_alone(p: &GordonParams) -> bool {
    p.second_trivial() && p.b == p.exponent() && p.j >= 0
}
fn is_first_exponent_matched_shift(p: &GordonParams) -> bool {
    p.b == p.exponent() && p.q() == p.j && p.j >= 0
}
fn is_second_exponent_matched(p: &GordonParams) -> bool {
    p.b_prime == p.exponent() && p.j >= p.q() && p.j >= 0
}
fn is_second_equals_denominator(p: &GordonParams) -> bool {
    p.b_prime == p.c && p.q() <= 0 && p.j >= 0
}
fn is_first_exponent_matched(p: &GordonParams) -> bool {
    p.b == p.exponent() && p.j >= 0
}
fn is_first_lowered_by_j(p: &GordonParams) -> bool {
    p.j >= 1 && p.b == p.c - p.jf()
}
fn is_opposite_arguments(p: &GordonParams) -> bool {
    p.b_prime == p.b && p.z == -p.w && p.q() == 0
}
fn is_equal_arguments(p: &GordonParams) -> bool {
    p.b_prime == p.c - p.b && p.w == p.z && p.q() == 0
}
fn is_single_unshifted_sum(p: &GordonParams) -> bool {
    p.first_trivial() && p.q() == 0 && p.j >= 0
}
fn always(_: &GordonParams) -> bool {
    true
}
fn is_raised_shift(p: &GordonParams) -> bool {
    p.q() > 0
}
fn is_lowered_shift(p: &GordonParams) -> bool {
    p.q() < 0
}

// ---- evaluators ----

fn gamma_moment(p: &GordonParams, _: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let v = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value();
    Ok(EvalResult::exact_value(v, special("SPECIAL-GAMMA")))
}

/// λ^{b'−c}Γ(c)/(λ−z)^{b'}.
fn single_zero_shift(p: &GordonParams, _: &SeriesControl) -> Result<EvalResult> {
    let v = Prefactor::gamma(p.c)?
        .times_pow(p.lambda, p.b_prime - p.c)?
        .over_pow(p.lambda - p.z, p.b_prime)?
        .value();
    Ok(EvalResult::exact_value(v, special("SPECIAL-39")))
}

/// Γ(c+j)/(λ^{c+j−b'}(λ−z)^{b'}); for b' = −n this is Γ(c+j)λ^{−c−j}(1−z/λ)^n.
fn single_matched_shift(p: &GordonParams, _: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let (v, tag) = match poly_degree(p.b_prime) {
        Some(n) => {
            let base = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value();
            (base * real_pow(1.0 - p.z / p.lambda, n as f64)?, "SPECIAL-71")
        }
        None => {
            let v = Prefactor::gamma(e)?
                .over_pow(p.lambda, e - p.b_prime)?
                .over_pow(p.lambda - p.z, p.b_prime)?
                .value();
            (v, "SPECIAL-37")
        }
    };
    Ok(EvalResult::exact_value(v, special(tag)))
}

/// b' = −n, z = λ: Γ(c+j)λ^{−c−j}(q−j)_n/(c+q)_n, which vanishes exactly
/// for 0 ≤ j−q < n; the moment j = n, q = 0 is (−1)^n n! Γ(c)/λ^{c+n}.
fn single_poly_at_rate(p: &GordonParams, _: &SeriesControl) -> Result<EvalResult> {
    let n = poly_degree(p.b_prime).ok_or_else(|| Error::NotApplicable("b' not a polynomial degree".into()))?;
    let e = p.exponent();
    if p.j == n as i64 && p.q() == 0 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let v = Prefactor::gamma(p.c)?.over_pow(p.lambda, p.c + n as f64)?.times(sign * factorial(n)).value();
        return Ok(EvalResult::exact_value(v, special("SPECIAL-72")));
    }
    let num = pochhammer(p.qf() - p.jf(), n);
    let den = pochhammer(p.c2(), n);
    if den == 0.0 {
        return Err(Error::Pole(p.c2()));
    }
    let v = if num == 0.0 { 0.0 } else { Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value() * num / den };
    Ok(EvalResult::exact_value(v, special("SPECIAL-70")))
}

/// b' = −n: Γ(c+j)λ^{−c−j} ₂F₁(−n, c+j; c+q; z/λ).
fn single_poly(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value();
    Ok(hyp2f1(p.b_prime, e, p.c2(), p.z / p.lambda, ctrl)?.scaled(pre).with_strategy(special("SPECIAL-69")))
}

/// Euler-transformed single-factor form, a finite sum for j ≥ q:
/// Γ(c+j)/(λ^{c+q−b'}(λ−z)^{b'−q+j}) ₂F₁(q−j, c+q−b'; c+q; z/λ).
fn single_euler(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let (e, q, c2) = (p.exponent(), p.qf(), p.c2());
    let pre = Prefactor::gamma(e)?
        .over_pow(p.lambda, c2 - p.b_prime)?
        .over_pow(p.lambda - p.z, p.b_prime - q + p.jf())?
        .value();
    Ok(hyp2f1(q - p.jf(), c2 - p.b_prime, c2, p.z / p.lambda, ctrl)?.scaled(pre).with_strategy(special("SPECIAL-36")))
}

/// Γ(c+j)λ^{−c−j} ₂F₁(c+j, b'; c+q; z/λ).
fn single_gauss(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value();
    Ok(hyp2f1(e, p.b_prime, p.c2(), p.z / p.lambda, ctrl)?.scaled(pre).with_strategy(special("SPECIAL-36")))
}

/// b = c+j with the second factor trivial:
/// Γ(c+j)/(λ−w)^{c+j} ₂F₁(−j, c+j; c; w/(w−λ)).
fn first_exponent_matched_alone(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda - p.w, e)?.value();
    let x = p.w / (p.w - p.lambda);
    Ok(hyp2f1(-p.jf(), e, p.c, x, ctrl)?.scaled(pre).with_strategy(special("SPECIAL-35")))
}

/// b = c+j, q = j: Γ(c+j)(λ−w)^{b'−c−j}/(λ−z−w)^{b'}
/// · F₁(−j; c+j−b', b'; c; w/(w−λ), w/(w+z−λ)).
fn first_exponent_matched_shift(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let GordonParams { b_prime: bp, lambda, w, z, .. } = *p;
    let pre = Prefactor::gamma(e)?
        .times_pow(lambda - w, bp - e)?
        .over_pow(lambda - z - w, bp)?
        .value();
    let f1 = AppellF1Params { a: -p.jf(), b: e - bp, b_prime: bp, c: p.c, w: w / (w - lambda), z: w / (w + z - lambda) };
    Ok(appell_f1(&f1, ctrl)?.scaled(pre).with_strategy(special("SPECIAL-5")))
}

/// b' = c+j: finite sum over k ≤ j−q of ₂F₁(b, −j−k; c; w/(w+z−λ)) with
/// prefactor Γ(c+j)/((λ−z)^{c+j−b}(λ−z−w)^b).
fn second_exponent_matched(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let GordonParams { b, lambda, w, z, .. } = *p;
    let pre = Prefactor::gamma(e)?.over_pow(lambda - z, e - b)?.over_pow(lambda - z - w, b)?.value();
    let zr = z / (z - lambda);
    let x = w / (w + z - lambda);
    let mut comb = Combination::new();
    for k in 0..=(p.j - p.q()) as u64 {
        let coeff = pochhammer(p.qf() - p.jf(), k) * pochhammer(e, k) / (pochhammer(p.c2(), k) * factorial(k))
            * zr.powi(k as i32);
        if coeff == 0.0 {
            continue;
        }
        comb.add(coeff, &hyp2f1(b, -p.jf() - k as f64, p.c, x, ctrl)?);
    }
    Ok(comb.finish(special("SPECIAL-9")).scaled(pre))
}

/// b' = c, q = −p: Γ(c+j)(λ−z)^{b−c−j}/(λ−w−z)^b
/// · Σ_{k≤p} (−p)_k(c+j)_k/((c−p)_k k!)(z/(z−λ))^k ₂F₁(−k−j, b; c; w/(w+z−λ)).
fn second_equals_denominator(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let GordonParams { b, lambda, w, z, .. } = *p;
    let pp = p.p as u64;
    let pre = Prefactor::gamma(e)?.times_pow(lambda - z, b - e)?.over_pow(lambda - w - z, b)?.value();
    let zr = z / (z - lambda);
    let x = w / (w + z - lambda);
    let mut comb = Combination::new();
    for k in 0..=pp {
        let den = pochhammer(p.c - pp as f64, k) * factorial(k);
        if den == 0.0 {
            return Err(Error::Pole(p.c - pp as f64));
        }
        let coeff = pochhammer(-(pp as f64), k) * pochhammer(e, k) / den * zr.powi(k as i32);
        comb.add(coeff, &hyp2f1(-(k as f64) - p.jf(), b, p.c, x, ctrl)?);
    }
    Ok(comb.finish(special("SPECIAL-34")).scaled(pre))
}

/// b = c+j (Kummer-transformed first factor): Γ(c+j)/(λ−w)^{c+j}
/// · Σ_{k≤j} (−j)_k(c+j)_k/((c)_k k!)(w/(w−λ))^k ₂F₁(b', c+j+k; c+q; z/(λ−w)).
fn first_exponent_matched(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let GordonParams { b_prime: bp, lambda, w, z, .. } = *p;
    let pre = Prefactor::gamma(e)?.over_pow(lambda - w, e)?.value();
    let wr = w / (w - lambda);
    let x = z / (lambda - w);
    let mut comb = Combination::new();
    for k in 0..=p.j as u64 {
        let den = pochhammer(p.c, k) * factorial(k);
        if den == 0.0 {
            return Err(Error::Pole(p.c));
        }
        let coeff = pochhammer(-p.jf(), k) * pochhammer(e, k) / den * wr.powi(k as i32);
        if coeff == 0.0 {
            continue;
        }
        comb.add(coeff, &hyp2f1(bp, e + k as f64, p.c2(), x, ctrl)?);
    }
    Ok(comb.finish(special("SPECIAL-11")).scaled(pre))
}

fn first_lowered_by_j(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    Ok(rewrites::lower_first_numerator(p, p.j as u32, ctrl)?.with_strategy(special("SPECIAL-13")))
}

/// b' = b, z = −w, q = 0: Γ(c+j)λ^{−c−j}
/// ₄F₃(b, c−b, (c+j)/2, (c+j+1)/2; c, c/2, (c+1)/2; w²/λ²), with the
/// ₃F₂ and ₂F₁ collapses for j = 1 and j = 1, b = c/2.
fn opposite_arguments(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value();
    let x = (p.w / p.lambda).powi(2);
    reduced_quartic(p, x, pre, ["SPECIAL-23", "SPECIAL-24", "SPECIAL-25"], ctrl)
}

/// b' = c−b, w = z, q = 0: the same reduction with λ → λ−w and argument
/// w²/(λ−w)².
fn equal_arguments(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda - p.w, e)?.value();
    let x = (p.w / (p.lambda - p.w)).powi(2);
    reduced_quartic(p, x, pre, ["SPECIAL-27", "SPECIAL-28", "SPECIAL-29"], ctrl)
}

fn reduced_quartic(
    p: &GordonParams,
    x: f64,
    pre: f64,
    tags: [&'static str; 3],
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    let (b, c, e) = (p.b, p.c, p.exponent());
    let r = if p.j == 1 && b == c / 2.0 {
        hyp2f1(c / 2.0, c / 2.0 + 1.0, c, x, ctrl)?.with_strategy(special(tags[2]))
    } else if p.j == 1 {
        hyp_pfq(&[b, c - b, c / 2.0 + 1.0], &[c, c / 2.0], x, ctrl)?.with_strategy(special(tags[1]))
    } else {
        hyp_pfq(&[b, c - b, e / 2.0, (e + 1.0) / 2.0], &[c, c / 2.0, (c + 1.0) / 2.0], x, ctrl)?
            .with_strategy(special(tags[0]))
    };
    Ok(r.scaled(pre))
}

/// q = 0 with a trivial first factor, as a finite sum of ₂F₁ values:
/// Γ(c+j)/(λ^{c+j−b'}(λ−z)^{b'})·(1 + b'z/(c(λ−z)) Σ_{k=1}^{j} ₂F₁(k−j, b'+1; c+1; z/(z−λ))).
fn single_unshifted_sum(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.exponent();
    let GordonParams { b_prime: bp, c, lambda, z, .. } = *p;
    let pre = Prefactor::gamma(e)?.over_pow(lambda, e - bp)?.over_pow(lambda - z, bp)?.value();
    let mut comb = Combination::new();
    comb.add_scalar(1.0);
    let coeff = bp * z / (c * (lambda - z));
    for k in 1..=p.j {
        comb.add(coeff, &hyp2f1((k - p.j) as f64, bp + 1.0, c + 1.0, z / (z - lambda), ctrl)?);
    }
    Ok(comb.finish(special("SPECIAL-38")).scaled(pre))
}

fn raise_first_pair(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    rewrites::raise_first_pair(p, 1, ctrl)
}
fn raise_first_pair_via_lowered(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    rewrites::raise_first_pair_via_lowered_denominators(p, 1, ctrl)
}
fn raise_first_numerator(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    rewrites::raise_first_numerator(p, 1, ctrl)
}
fn lower_first_pair(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    rewrites::lower_first_pair(p, 1, ctrl)
}
fn raised_shift(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    rewrites::raised_second_denominator(p, ctrl)
}
fn lowered_shift(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    rewrites::lowered_second_denominator(p, ctrl)
}

macro_rules! entry {
    ($tag:expr, [$($t:expr),*], $class:ident, $desc:expr, $m:expr, $e:expr) => {
        CatalogEntry {
            tag: $tag,
            tags: &[$($t),*],
            class: CatalogClass::$class,
            description: $desc,
            matches: $m,
            eval: $e,
        }
    };
}

/// Every catalog entry in dispatch order.
pub static CATALOG: &[CatalogEntry] = &[
    entry!("SPECIAL-GAMMA", ["SPECIAL-GAMMA"], Exact, "both confluent factors trivial", is_gamma_moment, gamma_moment),
    entry!("SPECIAL-39", ["SPECIAL-39"], Exact, "one trivial factor, j = q = 0", is_single_zero_shift, single_zero_shift),
    entry!("SPECIAL-37", ["SPECIAL-37", "SPECIAL-71"], Exact, "one trivial factor, q = j", is_single_matched_shift, single_matched_shift),
    entry!("SPECIAL-70", ["SPECIAL-70", "SPECIAL-72"], Exact, "one trivial factor, polynomial at z = λ", is_single_poly_at_rate, single_poly_at_rate),
    entry!("SPECIAL-69", ["SPECIAL-69"], Exact, "one trivial factor, polynomial", is_single_poly, single_poly),
    entry!("SPECIAL-36", ["SPECIAL-36"], Exact, "one trivial factor, j ≥ q, Euler form", is_single_euler, single_euler),
    entry!("SPECIAL-35", ["SPECIAL-35"], Exact, "b = c+j, second factor trivial", is_first_exponent_matched_alone, first_exponent_matched_alone),
    entry!("SPECIAL-5", ["SPECIAL-5"], Exact, "b = c+j, q = j", is_first_exponent_matched_shift, first_exponent_matched_shift),
    entry!("SPECIAL-9", ["SPECIAL-9"], Exact, "b' = c+j, j ≥ q", is_second_exponent_matched, second_exponent_matched),
    entry!("SPECIAL-34", ["SPECIAL-34"], Exact, "b' = c, q ≤ 0", is_second_equals_denominator, second_equals_denominator),
    entry!("SPECIAL-36", ["SPECIAL-36"], NonTerminating, "one trivial factor, Gauss form", is_single_gauss, single_gauss),
    entry!("SPECIAL-23", ["SPECIAL-23", "SPECIAL-24", "SPECIAL-25"], NonTerminating, "b' = b, z = −w, q = 0", is_opposite_arguments, opposite_arguments),
    entry!("SPECIAL-27", ["SPECIAL-27", "SPECIAL-28", "SPECIAL-29"], NonTerminating, "b' = c−b, z = w, q = 0", is_equal_arguments, equal_arguments),
    entry!("SPECIAL-11", ["SPECIAL-11"], NonTerminating, "b = c+j, Kummer-transformed", is_first_exponent_matched, first_exponent_matched),
    entry!("SPECIAL-13", ["SPECIAL-13"], NonTerminating, "b = c−j", is_first_lowered_by_j, first_lowered_by_j),
    entry!("SPECIAL-38", ["SPECIAL-38"], Explicit, "one trivial factor, q = 0, finite ₂F₁ sum", is_single_unshifted_sum, single_unshifted_sum),
    entry!("SPECIAL-15", ["SPECIAL-15"], Explicit, "first pair (b, c) from (b−1, c−1)", always, raise_first_pair),
    entry!("SPECIAL-17", ["SPECIAL-17"], Explicit, "first pair (b, c) from (b−1, c−1), lowered denominators", always, raise_first_pair_via_lowered),
    entry!("SPECIAL-19", ["SPECIAL-19"], Explicit, "first numerator b from b−1", always, raise_first_numerator),
    entry!("SPECIAL-21", ["SPECIAL-21"], Explicit, "first pair (b, c) from (b+1, c+1)", always, lower_first_pair),
    entry!("SPECIAL-31", ["SPECIAL-31"], Explicit, "q = +p from unshifted F₂ values", is_raised_shift, raised_shift),
    entry!("SPECIAL-33", ["SPECIAL-33"], Explicit, "q = −p from unshifted F₂ values", is_lowered_shift, lowered_shift),
];

/// Where a catalog entry matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    AsGiven,
    Swapped,
}

/// Entries of one class whose pattern matches, as given first, then swapped.
pub fn matches_in_class(params: &GordonParams, class: CatalogClass) -> Vec<(&'static CatalogEntry, Orientation)> {
    let swapped = params.swapped();
    let mut out = Vec::new();
    for (o, p) in [(Orientation::AsGiven, params), (Orientation::Swapped, &swapped)] {
        for e in CATALOG.iter().filter(|e| e.class == class) {
            if (e.matches)(p) && !out.iter().any(|(x, _): &(&CatalogEntry, Orientation)| std::ptr::eq(*x, e)) {
                out.push((e, o));
            }
        }
    }
    out
}

/// Run one entry in one orientation.
pub fn run_entry(
    entry: &CatalogEntry,
    orientation: Orientation,
    params: &GordonParams,
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    let p = match orientation {
        Orientation::AsGiven => *params,
        Orientation::Swapped => params.swapped(),
    };
    p.check()?;
    if !(entry.matches)(&p) {
        return Err(Error::NotApplicable(format!("{} pattern does not match", entry.tag)));
    }
    (entry.eval)(&p, ctrl)
}

/// Failure reasons collected while trying catalog entries.
pub type Failures = Vec<(String, String)>;

pub(crate) fn try_class(
    params: &GordonParams,
    class: CatalogClass,
    ctrl: &SeriesControl,
    failures: &mut Failures,
) -> Option<EvalResult> {
    for (entry, o) in matches_in_class(params, class) {
        match run_entry(entry, o, params, ctrl) {
            Ok(r) if r.value.is_finite() => return Some(r),
            Ok(_) => failures.push((entry.tag.to_string(), "non-finite value".into())),
            Err(e) => failures.push((entry.tag.to_string(), e.to_string())),
        }
    }
    None
}

/// The first catalog closed form (exact class, then non-terminating) that
/// matches and evaluates successfully.
pub fn eval_special(params: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.check()?;
    let mut failures = Failures::new();
    for class in [CatalogClass::Exact, CatalogClass::NonTerminating] {
        if let Some(r) = try_class(params, class, ctrl, &mut failures) {
            return Ok(r);
        }
    }
    if failures.is_empty() {
        Err(Error::NotApplicable("no catalog pattern matches".into()))
    } else {
        Err(Error::AllStrategiesFailed(failures))
    }
}

/// Evaluate a named catalog entry (any class), as given or swapped.
pub fn eval_catalog_entry(tag: &str, params: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.check()?;
    let mut last = None;
    for entry in CATALOG.iter().filter(|e| e.tags.contains(&tag)) {
        for o in [Orientation::AsGiven, Orientation::Swapped] {
            match run_entry(entry, o, params, ctrl) {
                Ok(r) => return Ok(r),
                Err(e) => last = Some(e),
            }
        }
    }
    Err(last.unwrap_or_else(|| Error::NotApplicable(format!("unknown catalog tag {tag}"))))
}
