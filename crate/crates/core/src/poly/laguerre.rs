//! Integrals weighted by generalized Laguerre polynomials:
//! ∫ x^{c+j+s+μ−1} e^{−λx} L_{n−μ}^{c+q+μ−1}(zx) G(wx) dx, where G is
//! ₁F₁(b+s; c+s; ·) or L_{m−s}^{c+s−1}(·).

use serde::{Deserialize, Serialize};

use super::{not_applicable, orthogonality_sum, parity, special, terminating_sum};
use crate::error::{Error, Result};
use crate::gordon::{Prefactor, Sign};
use crate::result::EvalResult;
use crate::series::SeriesControl;
use crate::special::{factorial, hyp2f1, hyp_pfq, nonpositive_integer, pochhammer, real_pow};

/// The factor depending on wx.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum WFactor {
    /// ₁F₁(b+s; c+s; wx).
    Confluent(f64),
    /// L_{m−s}^{c+s−1}(wx).
    Laguerre(u32),
}

/// Parameters of a Laguerre-weighted integral; `mu` and `s` are the ladder
/// orders on the z and w sides (μ ≤ n, s ≤ m).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaguerreParams {
    pub n: u32,
    pub w_factor: WFactor,
    pub c: f64,
    pub j: i64,
    pub p: u32,
    pub sign: Sign,
    pub lambda: f64,
    pub w: f64,
    pub z: f64,
    pub s: u32,
    pub mu: u32,
}

impl LaguerreParams {
    fn q(&self) -> i64 {
        self.sign.factor() * self.p as i64
    }

    fn e(&self) -> f64 {
        self.c + self.j as f64
    }

    fn c2(&self) -> f64 {
        self.c + self.q() as f64
    }

    pub fn check(&self) -> Result<()> {
        if ![self.c, self.lambda, self.w, self.z].iter().all(|x| x.is_finite()) {
            return Err(Error::Domain("non-finite parameter".into()));
        }
        if self.e() <= 0.0 {
            return Err(Error::Domain(format!("c + j = {} must be positive", self.e())));
        }
        if self.lambda <= 0.0 {
            return Err(Error::Domain(format!("lambda = {} must be positive", self.lambda)));
        }
        if self.mu > self.n {
            return Err(Error::OrderBound(format!("mu = {} exceeds n = {}", self.mu, self.n)));
        }
        match self.w_factor {
            WFactor::Laguerre(m) if self.s > m => Err(Error::OrderBound(format!("s = {} exceeds m = {m}", self.s))),
            WFactor::Confluent(b) => {
                let (num, den) = (b + self.s as f64, self.c + self.s as f64);
                match nonpositive_integer(den) {
                    Some(d) if self.w != 0.0 && !nonpositive_integer(num).is_some_and(|k| k <= d) => {
                        Err(Error::Pole(den))
                    }
                    _ => Ok(()),
                }
            }
            _ => Ok(()),
        }
    }
}

/// ∫₀^∞ x^{power} e^{−λx} L_n^α(λx) dx = Γ(power+1)(α−power)_n / (λ^{power+1} n!).
///
/// The factor (α−power)_n gives the vanishing moments: zero whenever
/// α − power is an integer in (−n, 0].
pub fn laguerre_moment(n: u32, alpha: f64, power: f64, lambda: f64) -> Result<EvalResult> {
    if power <= -1.0 || lambda <= 0.0 || !(power.is_finite() && alpha.is_finite() && lambda.is_finite()) {
        return Err(Error::Domain("needs power > −1 and λ > 0".into()));
    }
    let num = pochhammer(alpha - power, n as u64);
    let v = if num == 0.0 {
        0.0
    } else {
        Prefactor::gamma(power + 1.0)?.over_pow(lambda, power + 1.0)?.value() * num / factorial(n as u64)
    };
    Ok(EvalResult::exact_value(v, special("SPECIAL-76")))
}

/// Evaluate a Laguerre-weighted integral by the most specific form.
pub fn laguerre_gordon(params: &LaguerreParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.check()?;
    let p = params;
    match p.w_factor {
        WFactor::Confluent(b) => {
            if p.s == 0 && p.mu == 0 && (b == 0.0 || p.w == 0.0) {
                return single_laguerre(p, ctrl);
            }
            let tag = match (p.s, p.mu) {
                (0, 0) => "SPECIAL-74",
                (0, _) => "SPECIAL-77",
                _ => "SPECIAL-78",
            };
            ladder_sum(p, b + p.s as f64, 1.0, tag, ctrl)
        }
        WFactor::Laguerre(m) => {
            if p.s > 0 || p.mu > 0 {
                let tag = if p.mu == 0 { "SPECIAL-80" } else { "SPECIAL-81" };
                return ladder_sum(p, p.s as f64 - m as f64, laguerre_norm(p, m), tag, ctrl);
            }
            if p.w == p.lambda {
                for route in [orthogonality, lowered_second, matched_shift, first_at_rate] {
                    match route(p, m, ctrl) {
                        Err(Error::NotApplicable(_)) => {}
                        other => return other,
                    }
                }
            }
            ladder_sum(p, -(m as f64), laguerre_norm(p, m), "SPECIAL-79", ctrl)
        }
    }
}

/// (−m)_s (c)_m / ((−1)^s m! (c)_s).
fn laguerre_norm(p: &LaguerreParams, m: u32) -> f64 {
    let s = p.s as u64;
    pochhammer(-(m as f64), s) * pochhammer(p.c, m as u64) / (parity(s) * factorial(m as u64) * pochhammer(p.c, s))
}

/// norm · Γ(e)(c+q)_n / (n! z^μ λ^{e+s})
///   · Σ_{k=μ}^n (−k)_μ(e+k)_s(−n)_k(e)_k/((c+q)_k k!)(z/λ)^k ₂F₁(e+k+s, B; c+s; w/λ).
fn ladder_sum(p: &LaguerreParams, second_num: f64, norm: f64, tag: &'static str, ctrl: &SeriesControl) -> Result<EvalResult> {
    if p.mu > 0 && p.z == 0.0 {
        return Err(Error::Domain("the z ladder divides by z^μ; z = 0".into()));
    }
    let (e, s, mu) = (p.e(), p.s as f64, p.mu as u64);
    let sum = terminating_sum(
        p.n,
        e,
        p.c2(),
        p.z / p.lambda,
        p.mu,
        |k| pochhammer(-(k as f64), mu) * pochhammer(e + k as f64, p.s as u64),
        |k| hyp2f1(e + k as f64 + s, second_num, p.c + s, p.w / p.lambda, ctrl).map(Some),
        special(tag),
    )?;
    let pre = Prefactor::gamma(e)?
        .over_pow(p.lambda, e + s)?
        .over_pow(p.z, mu as f64)?
        .times(norm * pochhammer(p.c2(), p.n as u64) / factorial(p.n as u64))
        .value();
    Ok(sum.scaled(pre))
}

/// One Laguerre factor alone: the moment at z = λ, otherwise
/// Γ(e)(c+q)_n/(n!λ^e) ₂F₁(−n, e; c+q; z/λ).
fn single_laguerre(p: &LaguerreParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.e();
    if p.z == p.lambda {
        return Ok(laguerre_moment(p.n, p.c2() - 1.0, e - 1.0, p.lambda)?.with_strategy(special("SPECIAL-75")));
    }
    let f = hyp2f1(-(p.n as f64), e, p.c2(), p.z / p.lambda, ctrl)?;
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e)?.value() * pochhammer(p.c2(), p.n as u64)
        / factorial(p.n as u64);
    Ok(f.scaled(pre).with_strategy(special("SPECIAL-75")))
}

/// w = z = λ, j = q = 0: (c)_n Γ(c)/(n! λ^c) δ_{mn}, from the exact sum
/// Σ_k (−m)_k(−k)_n/k! = n! δ_{mn}.
fn orthogonality(p: &LaguerreParams, m: u32, _: &SeriesControl) -> Result<EvalResult> {
    if !(p.z == p.lambda && p.j == 0 && p.q() == 0) {
        return Err(not_applicable("needs z = λ, j = q = 0"));
    }
    let (n, c) = (p.n as u64, p.c);
    let sum = orthogonality_sum(m, p.n);
    let v = if sum == 0.0 {
        0.0
    } else {
        Prefactor::gamma(c)?.over_pow(p.lambda, c)?.value() * pochhammer(c, m as u64) * sum
            / (factorial(m as u64) * factorial(n))
    };
    Ok(EvalResult::exact_value(v, special("SPECIAL-85")))
}

/// w = λ, j = q = 0, n ≥ m:
/// (−1)^m z^m Γ(c+n)(−n)_m / (m! n! λ^{c+n} (λ−z)^{m−n}).
fn lowered_second(p: &LaguerreParams, m: u32, _: &SeriesControl) -> Result<EvalResult> {
    if !(p.j == 0 && p.q() == 0 && p.n >= m) {
        return Err(not_applicable("needs j = q = 0 and n ≥ m"));
    }
    let (n, c, mf) = (p.n as f64, p.c, m as f64);
    let v = Prefactor::gamma(c + n)?
        .over_pow(p.lambda, c + n)?
        .times(parity(m as u64) * real_pow(p.z, mf)? * pochhammer(-n, m as u64) / (factorial(m as u64) * factorial(p.n as u64)))
        .value()
        * real_pow(p.lambda - p.z, n - mf)?;
    Ok(EvalResult::exact_value(v, special("SPECIAL-84")))
}

/// w = λ, q = j ≥ m: (−j)_m Γ(e+n)/(m! n! λ^e) ₂F₁(−n, 1+j; 1+j−m; z/λ).
fn matched_shift(p: &LaguerreParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    if !(p.q() == p.j && p.j >= m as i64) {
        return Err(not_applicable("needs q = j ≥ m"));
    }
    let (e, j) = (p.e(), p.j as f64);
    let f = hyp2f1(-(p.n as f64), 1.0 + j, 1.0 + j - m as f64, p.z / p.lambda, ctrl)?;
    let pre = Prefactor::gamma(e + p.n as f64)?
        .over_pow(p.lambda, e)?
        .times(pochhammer(-j, m as u64) / (factorial(m as u64) * factorial(p.n as u64)))
        .value();
    Ok(f.scaled(pre).with_strategy(special("SPECIAL-83")))
}

/// w = λ, j ≥ m: (−j)_m(c+q)_nΓ(e)/(m! n! λ^e) ₃F₂(−n, e, 1+j; c+q, 1+j−m; z/λ).
fn first_at_rate(p: &LaguerreParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    if p.j < m as i64 {
        return Err(not_applicable("needs j ≥ m"));
    }
    let (e, j) = (p.e(), p.j as f64);
    let f = hyp_pfq(&[-(p.n as f64), e, 1.0 + j], &[p.c2(), 1.0 + j - m as f64], p.z / p.lambda, ctrl)?;
    let pre = Prefactor::gamma(e)?
        .over_pow(p.lambda, e)?
        .times(
            pochhammer(-j, m as u64) * pochhammer(p.c2(), p.n as u64)
                / (factorial(m as u64) * factorial(p.n as u64)),
        )
        .value();
    Ok(f.scaled(pre).with_strategy(special("SPECIAL-82")))
}
