//! Rewrites of the integral as finite combinations of F₂ values at shifted
//! parameters: integer shifts of the first confluent pair (b, c) and of the
//! second denominator.
//!
//! Each function takes the target parameters and the shift size and
//! evaluates the target from the shifted base.

use crate::appell::{appell_f2_double, AppellF2Params};
use crate::error::{Error, Result};
use crate::result::{Combination, EvalResult, Strategy};
use crate::series::SeriesControl;
use crate::special::{factorial, pochhammer};

use super::params::{GordonParams, Prefactor};

/// F₂(a; b, b'; c, c'; w/λ, z/λ) for the target's arguments.
fn f2(p: &GordonParams, a: f64, b: f64, bp: f64, c: f64, cp: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    appell_f2_double(&AppellF2Params { a, b, b_prime: bp, c, c_prime: cp, w: p.w / p.lambda, z: p.z / p.lambda }, ctrl)
}

fn nonzero(x: f64, what: &str) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        Err(Error::Precondition(format!("{what} vanishes")))
    } else {
        Ok(x)
    }
}

/// First numerator b from b+n:
/// J = Γ(e)λ^{−e} Σ_k (−n)_k(e)_k/((c)_k k!)(w/λ)^k F₂(e+k; b+n, b'; c+k, c+q).
pub fn lower_first_numerator(p: &GordonParams, n: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    p.check()?;
    let (e, c, c2, nn) = (p.exponent(), p.c, p.c2(), n as u64);
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value();
    let x = p.w / p.lambda;
    let mut comb = Combination::new();
    for k in 0..=nn {
        let kf = k as f64;
        let coeff = pochhammer(-(nn as f64), k) * pochhammer(e, k) / nonzero(pochhammer(c, k), "(c)_k")?
            / factorial(k)
            * x.powi(k as i32);
        comb.add(coeff, &f2(p, e + kf, p.b + n as f64, p.b_prime, c + kf, c2, ctrl)?);
    }
    Ok(comb.finish(Strategy::Special("SPECIAL-13")).scaled(pre))
}

/// First pair (b, c) from (b−n, c−n) with raised denominators:
/// J = Γ(e)λ^{−e}(c₀)_n/(b₀)_n Σ_k (−n)_k(c₀−b₀)_k/((c₀)_k k!) F₂(e; b₀, b'; c₀+k, c+q).
pub fn raise_first_pair(p: &GordonParams, n: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    p.check()?;
    let (e, c2, nn) = (p.exponent(), p.c2(), n as u64);
    let (b0, c0) = (p.b - n as f64, p.c - n as f64);
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value() * pochhammer(c0, nn)
        / nonzero(pochhammer(b0, nn), "(b−n)_n")?;
    let mut comb = Combination::new();
    for k in 0..=nn {
        let coeff = pochhammer(-(nn as f64), k) * pochhammer(c0 - b0, k) / nonzero(pochhammer(c0, k), "(c−n)_k")?
            / factorial(k);
        comb.add(coeff, &f2(p, e, b0, p.b_prime, c0 + k as f64, c2, ctrl)?);
    }
    Ok(comb.finish(Strategy::Special("SPECIAL-15")).scaled(pre))
}

/// First pair (b, c) from (b−n, c−n) with lowered denominators:
/// J = (c₀−1)_n(c₀)_n/((−w)^n(b₀)_n) Γ(e−n)λ^{n−e}
///     Σ_k (−n)_k(1−c₀)_k/((2−c₀−n)_k k!) F₂(e−n; b₀, b'; c₀−k, c+q).
pub fn raise_first_pair_via_lowered_denominators(p: &GordonParams, n: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    p.check()?;
    let (e, c2, nn, nf) = (p.exponent(), p.c2(), n as u64, n as f64);
    let (b0, c0) = (p.b - nf, p.c - nf);
    if e - nf <= 0.0 {
        return Err(Error::Precondition(format!("needs c + j − n > 0, got {}", e - nf)));
    }
    if p.w == 0.0 && n > 0 {
        return Err(Error::Precondition("needs w ≠ 0".into()));
    }
    let pre = Prefactor::gamma(e - nf)?.over_pow(p.lambda, e - nf)?.value() * pochhammer(c0 - 1.0, nn)
        * pochhammer(c0, nn)
        / nonzero(pochhammer(b0, nn), "(b−n)_n")?
        / (-p.w).powi(n as i32);
    let mut comb = Combination::new();
    for k in 0..=nn {
        let coeff = pochhammer(-nf, k) * pochhammer(1.0 - c0, k)
            / nonzero(pochhammer(2.0 - c0 - nf, k), "(2−c−n)_k")?
            / factorial(k);
        if coeff == 0.0 {
            continue;
        }
        comb.add(coeff, &f2(p, e - nf, b0, p.b_prime, c0 - k as f64, c2, ctrl)?);
    }
    Ok(comb.finish(Strategy::Special("SPECIAL-17")).scaled(pre))
}

/// First numerator b from b−n at fixed c:
/// J = (b₀−c+1)_n/(b₀)_n Γ(e)λ^{−e} Σ_k (−n)_k(1−c)_k/((b₀−c+1)_k k!) F₂(e; b₀, b'; c−k, c+q).
pub fn raise_first_numerator(p: &GordonParams, n: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    p.check()?;
    let (e, c, c2, nn, nf) = (p.exponent(), p.c, p.c2(), n as u64, n as f64);
    let b0 = p.b - nf;
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value() * pochhammer(b0 - c + 1.0, nn)
        / nonzero(pochhammer(b0, nn), "(b−n)_n")?;
    let mut comb = Combination::new();
    for k in 0..=nn {
        let coeff = pochhammer(-nf, k) * pochhammer(1.0 - c, k)
            / nonzero(pochhammer(b0 - c + 1.0, k), "(b−n−c+1)_k")?
            / factorial(k);
        if coeff == 0.0 {
            continue;
        }
        comb.add(coeff, &f2(p, e, b0, p.b_prime, c - k as f64, c2, ctrl)?);
    }
    Ok(comb.finish(Strategy::Special("SPECIAL-19")).scaled(pre))
}

/// First pair (b, c) from (b+n, c+n):
/// J = w^n Γ(e+n)/(λ^{e+n}(1−c₀)_n) Σ_k (−n)_k(1−c₀)_k/(k!(1−e−n)_k)(λ/w)^k
///     F₂(e+n−k; b₀, b'; c₀−k, c+q).
pub fn lower_first_pair(p: &GordonParams, n: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    p.check()?;
    let (e, c2, nn, nf) = (p.exponent(), p.c2(), n as u64, n as f64);
    let (b0, c0) = (p.b + nf, p.c + nf);
    if p.w == 0.0 && n > 0 {
        return Err(Error::Precondition("needs w ≠ 0".into()));
    }
    let pre = Prefactor::gamma(e + nf)?.over_pow(p.lambda, e + nf)?.value() * p.w.powi(n as i32)
        / nonzero(pochhammer(1.0 - c0, nn), "(1−c−n)_n")?;
    let ratio = p.lambda / p.w;
    let mut comb = Combination::new();
    for k in 0..=nn {
        let coeff = pochhammer(-nf, k) * pochhammer(1.0 - c0, k)
            / nonzero(pochhammer(1.0 - e - nf, k), "(1−c−j−n)_k")?
            / factorial(k)
            * ratio.powi(k as i32);
        comb.add(coeff, &f2(p, e + nf - k as f64, b0, p.b_prime, c0 - k as f64, c2, ctrl)?);
    }
    Ok(comb.finish(Strategy::Special("SPECIAL-21")).scaled(pre))
}

/// q = +p from F₂ values with second denominator c + k:
/// J = Γ(e)(c)_p/(λ^e (c−b')_p) Σ_k (−p)_k(b')_k/(k!(c)_k) F₂(e; b, b'+k; c, c+k).
pub fn raised_second_denominator(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    p.check()?;
    if p.q() < 0 {
        return Err(Error::Precondition("needs q = +p".into()));
    }
    let (e, c, bp, pp) = (p.exponent(), p.c, p.b_prime, p.p as u64);
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value() * pochhammer(c, pp)
        / nonzero(pochhammer(c - bp, pp), "(c−b')_p")?;
    let mut comb = Combination::new();
    for k in 0..=pp {
        let kf = k as f64;
        let coeff = pochhammer(-(pp as f64), k) * pochhammer(bp, k) / (factorial(k) * nonzero(pochhammer(c, k), "(c)_k")?);
        if coeff == 0.0 {
            continue;
        }
        comb.add(coeff, &f2(p, e, p.b, bp + kf, c, c + kf, ctrl)?);
    }
    Ok(comb.finish(Strategy::Special("SPECIAL-31")).scaled(pre))
}

/// q = −p from F₂ values with second denominator c + k:
/// J = Γ(e)λ^{−e} Σ_k (−p)_k(b')_k(e)_k/((c)_k(c−p)_k k!)(−z/λ)^k F₂(e+k; b, b'+k; c, c+k).
pub fn lowered_second_denominator(p: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    p.check()?;
    if p.q() > 0 {
        return Err(Error::Precondition("needs q = −p".into()));
    }
    let (e, c, bp, pp) = (p.exponent(), p.c, p.b_prime, p.p as u64);
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value();
    let x = -p.z / p.lambda;
    let mut comb = Combination::new();
    for k in 0..=pp {
        let kf = k as f64;
        let den = nonzero(pochhammer(c, k) * pochhammer(c - pp as f64, k), "(c)_k(c−p)_k")? * factorial(k);
        let coeff = pochhammer(-(pp as f64), k) * pochhammer(bp, k) * pochhammer(e, k) / den * x.powi(k as i32);
        if coeff == 0.0 {
            continue;
        }
        comb.add(coeff, &f2(p, e + kf, p.b, bp + kf, c, c + kf, ctrl)?);
    }
    Ok(comb.finish(Strategy::Special("SPECIAL-33")).scaled(pre))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gordon::{eval_f2_series, Sign};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs())
    }

    #[test]
    fn shifts_of_several_sizes_reproduce_the_series() {
        let ctrl = SeriesControl::default();
        let base = GordonParams { b: 0.6, b_prime: 1.3, c: 3.7, j: 2, p: 1, sign: Sign::Plus, lambda: 3.0, w: 0.5, z: 0.7 };
        let want = eval_f2_series(&base, &ctrl).unwrap().value;
        for n in 0..=2 {
            for (name, v) in [
                ("lower numerator", lower_first_numerator(&base, n, &ctrl)),
                ("raise pair", raise_first_pair(&base, n, &ctrl)),
                ("raise pair lowered", raise_first_pair_via_lowered_denominators(&base, n, &ctrl)),
                ("raise numerator", raise_first_numerator(&base, n, &ctrl)),
                ("lower pair", lower_first_pair(&base, n, &ctrl)),
            ] {
                let v = v.unwrap_or_else(|e| panic!("{name} n={n}: {e}")).value;
                assert!(rel(v, want) < 1e-10, "{name} n={n}: {v} vs {want}");
            }
        }
        for (p, sign) in [(0, Sign::Plus), (2, Sign::Plus), (3, Sign::Plus), (2, Sign::Minus)] {
            let t = GordonParams { p, sign, ..base };
            let want = eval_f2_series(&t, &ctrl).unwrap().value;
            let v = match sign {
                Sign::Plus => raised_second_denominator(&t, &ctrl),
                Sign::Minus => lowered_second_denominator(&t, &ctrl),
            }
            .unwrap()
            .value;
            assert!(rel(v, want) < 1e-10, "p={p}: {v} vs {want}");
        }
    }
}
