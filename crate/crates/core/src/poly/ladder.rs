//! Differentiation ladders: integrals whose polynomial factors carry lowered
//! degrees and raised denominators, obtained by differentiating the base
//! finite sums in w or z.

use super::{not_applicable, parity, special, terminating_sum, First, PolyGordonParams};
use crate::error::{Error, Result};
use crate::gordon::Prefactor;
use crate::result::EvalResult;
use crate::series::SeriesControl;
use crate::special::{hyp2f1, pochhammer};

/// Value of ∫ x^{c+j+s+μ−1} e^{−λx} ₁F₁(b+s; c+s; wx) ₁F₁(μ−n; c+q+μ; zx) dx
/// from the ladder sums. Orders zero reduce to [`super::poly_gordon`].
///
/// A general first numerator allows only the z ladder (s = 0); a polynomial
/// first factor b = −m allows s ≤ m and μ ≤ n.
pub fn poly_gordon_derivative_ladder(params: &PolyGordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.check()?;
    if params.s == 0 && params.mu == 0 {
        return super::poly_gordon(params, ctrl);
    }
    match params.first {
        First::Numerator(b) => z_ladder(params, b, ctrl),
        First::Degree(m) => double_ladder(params, m, ctrl),
    }
}

/// (−1)^μ Γ(e)(c+q)_μ / ((−n)_μ z^μ λ^{e−b}(λ−w)^b)
///   · Σ_{k=μ}^n (−k)_μ(−n)_k(e)_k/((c+q)_k k!)(z/λ)^k ₂F₁(−j−k, b; c; w/(w−λ)).
fn z_ladder(p: &PolyGordonParams, b: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    if p.z == 0.0 {
        return Err(Error::Domain("the z ladder divides by z^μ; z = 0".into()));
    }
    if p.w == p.lambda {
        return Err(not_applicable("w = λ with a non-polynomial first factor"));
    }
    let (mu, e) = (p.mu as u64, p.e());
    let x = p.w / (p.w - p.lambda);
    let sum = terminating_sum(
        p.n,
        e,
        p.c2(),
        p.z / p.lambda,
        p.mu,
        |k| pochhammer(-(k as f64), mu),
        |k| hyp2f1(-p.jf() - k as f64, b, p.c, x, ctrl).map(Some),
        special("SPECIAL-41"),
    )?;
    let pre = Prefactor::gamma(e)?
        .over_pow(p.lambda, e - b)?
        .over_pow(p.lambda - p.w, b)?
        .over_pow(p.z, mu as f64)?
        .times(parity(mu) * pochhammer(p.c2(), mu) / pochhammer(-(p.n as f64), mu))
        .value();
    Ok(sum.scaled(pre))
}

/// (−1)^s Γ(e)(c)_s / (λ^{e+μ} w^s (−m)_s)
///   · Σ_{k=s}^m (e+k)_μ(e)_k(−m)_k(−k)_s/((c)_k k!)(w/λ)^k ₂F₁(μ−n, e+k+μ; c+q+μ; z/λ).
fn double_ladder(p: &PolyGordonParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    let (s, mu, e) = (p.s as u64, p.mu as f64, p.e());
    if s > 0 && p.w == 0.0 {
        return Err(Error::Domain("the w ladder divides by w^s; w = 0".into()));
    }
    let tag = if p.mu == 0 { "SPECIAL-43" } else { "SPECIAL-44" };
    let sum = terminating_sum(
        m,
        e,
        p.c,
        p.w / p.lambda,
        p.s,
        |k| pochhammer(e + k as f64, p.mu as u64) * pochhammer(-(k as f64), s),
        |k| hyp2f1(mu - p.n as f64, e + k as f64 + mu, p.c2() + mu, p.z / p.lambda, ctrl).map(Some),
        special(tag),
    )?;
    let pre = Prefactor::gamma(e)?
        .over_pow(p.lambda, e + mu)?
        .over_pow(p.w, s as f64)?
        .times(parity(s) * pochhammer(p.c, s) / pochhammer(-(m as f64), s))
        .value();
    Ok(sum.scaled(pre))
}
