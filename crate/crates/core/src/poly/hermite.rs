//! Integrals weighted by Hermite polynomials of argument √(tx), written
//! through their ₁F₁ forms with denominator 1/2 or 3/2.

use serde::{Deserialize, Serialize};

use super::{not_applicable, parity, special, terminating_sum};
use crate::error::{Error, Result};
use crate::gordon::{Prefactor, Sign};
use crate::result::EvalResult;
use crate::series::SeriesControl;
use crate::special::{factorial, hyp2f1, hyp_pfq, pochhammer};

/// Hermite-weighted integrals. `m` is always the half-degree of the
/// H_{2m}(√(wx)) factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum HermiteParams {
    /// ∫ x^{j−1/2} e^{−λx} L_n^{q−1/2}(zx) H_{2m}(√(wx)) dx.
    LaguerreEven { n: u32, m: u32, j: i64, p: u32, sign: Sign, lambda: f64, w: f64, z: f64 },
    /// ∫ x^{j−1} e^{−λx} H_{2m}(√(wx)) H_{2n+1}(√(zx)) dx, z ≥ 0.
    EvenOdd { m: u32, n: u32, j: i64, lambda: f64, w: f64, z: f64 },
    /// ∫ x^{j−1/2} e^{−λx} H_{2m}(√(wx)) H_{2n}(√(zx)) dx.
    EvenEven { m: u32, n: u32, j: i64, lambda: f64, w: f64, z: f64 },
}

fn check_common(j: i64, lambda: f64, w: f64, z: f64) -> Result<()> {
    if ![lambda, w, z].iter().all(|x| x.is_finite()) {
        return Err(Error::Domain("non-finite parameter".into()));
    }
    if lambda <= 0.0 {
        return Err(Error::Domain(format!("lambda = {lambda} must be positive")));
    }
    if j < 0 {
        return Err(Error::Domain(format!("j = {j} must be nonnegative")));
    }
    Ok(())
}

/// (−1)^m (2m)!/m!, the leading factor of H_{2m}(√t) = (−1)^m(2m)!/m! ₁F₁(−m; 1/2; t).
fn even_norm(m: u32) -> f64 {
    parity(m as u64) * factorial(2 * m as u64) / factorial(m as u64)
}

/// (−1)^n (2n+1)!/n!, so that H_{2n+1}(√t) = 2√t times this times ₁F₁(−n; 3/2; t).
fn odd_norm(n: u32) -> f64 {
    parity(n as u64) * factorial(2 * n as u64 + 1) / factorial(n as u64)
}

pub fn hermite_gordon(params: &HermiteParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    match *params {
        HermiteParams::LaguerreEven { n, m, j, p, sign, lambda, w, z } => {
            check_common(j, lambda, w, z)?;
            let q = (sign.factor() * p as i64) as f64;
            laguerre_even(n, m, j, q, lambda, w, z, ctrl)
        }
        HermiteParams::EvenOdd { m, n, j, lambda, w, z } => {
            check_common(j, lambda, w, z)?;
            if z < 0.0 {
                return Err(Error::Domain(format!("z = {z} must be nonnegative (argument √(zx))")));
            }
            if z == lambda && j > n as i64 {
                return even_odd_at_rate(m, n, j, lambda, w, ctrl);
            }
            even_odd(m, n, j, lambda, w, z, ctrl)
        }
        HermiteParams::EvenEven { m, n, j, lambda, w, z } => {
            check_common(j, lambda, w, z)?;
            even_even(m, n, j, lambda, w, z, ctrl)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn laguerre_even(n: u32, m: u32, j: i64, q: f64, lambda: f64, w: f64, z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let h = j as f64 + 0.5;
    let base = Prefactor::gamma(h)?.over_pow(lambda, h)?.value() * even_norm(m) / factorial(n as u64);
    if n == m && j == 0 && q == 0.0 && w == lambda && z == lambda {
        // (−1)^n ((2n)!)² √π / (4^n (n!)² (1/2)_n √λ)
        let v = parity(n as u64) * (factorial(2 * n as u64) / factorial(n as u64)).powi(2) * std::f64::consts::PI.sqrt()
            / (4f64.powi(n as i32) * pochhammer(0.5, n as u64) * lambda.sqrt());
        return Ok(EvalResult::exact_value(v, special("SPECIAL-89")));
    }
    if w == lambda && j >= m as i64 {
        // (−j)_m/(1/2)_m · (q+1/2)_n ₃F₂(−n, j+1/2, 1+j; q+1/2, 1+j−m; z/λ)
        let jf = j as f64;
        let f = hyp_pfq(&[-(n as f64), h, 1.0 + jf], &[q + 0.5, 1.0 + jf - m as f64], z / lambda, ctrl)?;
        let pre = base * pochhammer(q + 0.5, n as u64) * pochhammer(-jf, m as u64) / pochhammer(0.5, m as u64);
        return Ok(f.scaled(pre).with_strategy(special("SPECIAL-87")));
    }
    // (q+1/2)_n Σ_k (−n)_k(j+1/2)_k/((q+1/2)_k k!)(z/λ)^k ₂F₁(j+k+1/2, −m; 1/2; w/λ)
    let sum = terminating_sum(
        n,
        h,
        q + 0.5,
        z / lambda,
        0,
        |_| 1.0,
        |k| hyp2f1(h + k as f64, -(m as f64), 0.5, w / lambda, ctrl).map(Some),
        special("SPECIAL-86"),
    )?;
    Ok(sum.scaled(base * pochhammer(q + 0.5, n as u64)))
}

/// 2√z (−1)^{m+n}(2m)!/m!(2n+1)!/n! Γ(j+1/2)/λ^{j+1/2}
///   · Σ_k (j+1/2)_k(−m)_k/((1/2)_k k!)(w/λ)^k ₂F₁(−n, j+1/2+k; 3/2; z/λ).
fn even_odd(m: u32, n: u32, j: i64, lambda: f64, w: f64, z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let h = j as f64 + 0.5;
    let sum = terminating_sum(
        m,
        h,
        0.5,
        w / lambda,
        0,
        |_| 1.0,
        |k| hyp2f1(-(n as f64), h + k as f64, 1.5, z / lambda, ctrl).map(Some),
        special("SPECIAL-90"),
    )?;
    let pre = Prefactor::gamma(h)?.over_pow(lambda, h)?.value() * even_norm(m) * odd_norm(n) * 2.0 * z.sqrt();
    Ok(sum.scaled(pre))
}

/// z = λ, j > n: 2(−1)^{m+n}(2m)!/m!(2n+1)!/n! Γ(j+1/2)/λ^j (1−j)_n/(3/2)_n
///   · ₃F₂(j+1/2, j, −m; 1/2, j−n; w/λ).
fn even_odd_at_rate(m: u32, n: u32, j: i64, lambda: f64, w: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    if j <= n as i64 {
        return Err(not_applicable("needs j > n"));
    }
    let jf = j as f64;
    let f = hyp_pfq(&[jf + 0.5, jf, -(m as f64)], &[0.5, jf - n as f64], w / lambda, ctrl)?;
    let pre = Prefactor::gamma(jf + 0.5)?.over_pow(lambda, jf)?.value()
        * 2.0
        * even_norm(m)
        * odd_norm(n)
        * pochhammer(1.0 - jf, n as u64)
        / pochhammer(1.5, n as u64);
    Ok(f.scaled(pre).with_strategy(special("SPECIAL-91")))
}

/// (−1)^{m+n}(2m)!/m!(2n)!/n! Γ(j+1/2)/λ^{j+1/2}
///   · Σ_k (j+1/2)_k(−m)_k/((1/2)_k k!)(w/λ)^k ₂F₁(−n, j+1/2+k; 1/2; z/λ).
fn even_even(m: u32, n: u32, j: i64, lambda: f64, w: f64, z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let h = j as f64 + 0.5;
    let sum = terminating_sum(
        m,
        h,
        0.5,
        w / lambda,
        0,
        |_| 1.0,
        |k| hyp2f1(-(n as f64), h + k as f64, 0.5, z / lambda, ctrl).map(Some),
        special("SPECIAL-92"),
    )?;
    let pre = Prefactor::gamma(h)?.over_pow(lambda, h)?.value() * even_norm(m) * even_norm(n);
    Ok(sum.scaled(pre))
}
