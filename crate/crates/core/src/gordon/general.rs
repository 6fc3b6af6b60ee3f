//! The three general strategies: the F₂ series, the finite sum of F₁
//! values and the finite double sum of ₂F₁ values.

use crate::appell::{appell_f1, appell_f2_double, AppellF1Params, AppellF2Params};
use crate::error::{Error, Result};
use crate::result::{Combination, EvalResult, Strategy};
use crate::series::SeriesControl;
use crate::special::{factorial, hyp2f1, pochhammer};

use super::params::{GordonParams, Prefactor};

/// Γ(c+j)/λ^{c+j} · F₂(c+j; b, b'; c, c+q; w/λ, z/λ).
pub fn eval_f2_series(params: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.check()?;
    let GordonParams { b, b_prime, c, lambda, w, z, .. } = *params;
    let e = params.exponent();
    let f2 = AppellF2Params { a: e, b, b_prime, c, c_prime: params.c2(), w: w / lambda, z: z / lambda };
    let pre = Prefactor::gamma(e)?.over_pow(lambda, e)?.value();
    Ok(appell_f2_double(&f2, ctrl)?.scaled(pre).with_strategy(Strategy::F2Series))
}

/// Finite sum over k ≤ j − q of F₁(b; c+j−b', b'+k; c; w/λ, w/(λ−z)),
/// with prefactor Γ(c+j)/(λ^{c+j−b'}(λ−z)^{b'}).
pub fn eval_f1_sum(params: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.check()?;
    let GordonParams { b, b_prime: bp, c, lambda, w, z, .. } = *params;
    let (e, q, c2) = (params.exponent(), params.qf(), params.c2());
    let top = params.j - params.q();
    if top < 0 {
        return Err(Error::Precondition(format!("needs j − q ≥ 0, got {top}")));
    }
    if z == 0.0 || z == lambda {
        return Err(Error::Precondition("needs z ∉ {0, λ}".into()));
    }
    let pre = Prefactor::gamma(e)?.over_pow(lambda, e - bp)?.over_pow(lambda - z, bp)?.value();
    let ratio = z / (z - lambda);
    let mut comb = Combination::new();
    let mut coeff = 1.0;
    for k in 0..=top as u64 {
        let kf = k as f64;
        if k > 0 {
            coeff *= (q - params.jf() + kf - 1.0) * (bp + kf - 1.0) / ((c2 + kf - 1.0) * kf) * ratio;
            if !coeff.is_finite() {
                return Err(Error::Pole(c2 + kf - 1.0));
            }
        }
        if coeff == 0.0 {
            continue;
        }
        let f1 = AppellF1Params { a: b, b: e - bp, b_prime: bp + kf, c, w: w / lambda, z: w / (lambda - z) };
        comb.add(coeff, &appell_f1(&f1, ctrl)?);
    }
    Ok(comb.finish(Strategy::F1Sum).scaled(pre))
}

/// Finite double sum of ₂F₁(b+r, b'+k; c+r; wz/((λ−z)(λ−w))) over
/// k ≤ j − q and r ≤ j + k, with prefactor
/// Γ(c+j)/(λ^{c+j−b−b'}(λ−w)^b(λ−z)^{b'}).
pub fn eval_2f1_double_sum(params: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.check()?;
    let GordonParams { b, b_prime: bp, c, lambda, w, z, .. } = *params;
    let (e, c2) = (params.exponent(), params.c2());
    let (j, q) = (params.j, params.q());
    if j < 0 || j - q < 0 {
        return Err(Error::Precondition(format!("needs j ≥ 0 and j − q ≥ 0, got j = {j}, q = {q}")));
    }
    if w == 0.0 || w == lambda || z == 0.0 || z == lambda {
        return Err(Error::Precondition("needs w, z ∉ {0, λ}".into()));
    }
    let pre = Prefactor::gamma(e)?
        .over_pow(lambda, e - b - bp)?
        .over_pow(lambda - w, b)?
        .over_pow(lambda - z, bp)?
        .value();
    let x = w * z / ((lambda - z) * (lambda - w));
    let zr = z / (z - lambda);
    let wr = w / (w - lambda);
    let mut comb = Combination::new();
    for k in 0..=(j - q) as u64 {
        let kf = k as f64;
        let outer = pochhammer((q - j) as f64, k) * pochhammer(bp, k) / (pochhammer(c2, k) * factorial(k))
            * zr.powi(k as i32);
        if outer == 0.0 {
            continue;
        }
        if !outer.is_finite() {
            return Err(Error::Pole(c2));
        }
        let top = j as u64 + k;
        let mut inner = 1.0;
        for r in 0..=top {
            let rf = r as f64;
            if r > 0 {
                inner *= (b + rf - 1.0) * (rf - 1.0 - top as f64) / ((c + rf - 1.0) * rf) * wr;
                if !inner.is_finite() {
                    return Err(Error::Pole(c + rf - 1.0));
                }
            }
            if inner == 0.0 {
                continue;
            }
            comb.add(outer * inner, &hyp2f1(b + rf, bp + kf, c + rf, x, ctrl)?);
        }
    }
    Ok(comb.finish(Strategy::TwoF1DoubleSum).scaled(pre))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gordon::Sign;

    fn gp(b: f64, bp: f64, c: f64, j: i64, p: u32, lambda: f64, w: f64, z: f64) -> GordonParams {
        GordonParams { b, b_prime: bp, c, j, p, sign: Sign::Plus, lambda, w, z }
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs())
    }

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn f2_series_gamma_case() {
        let v = eval_f2_series(&gp(0.3, 0.4, 2.0, 1, 0, 1.0, 0.0, 0.0), &ctrl()).unwrap().value;
        assert!((v - 2.0).abs() < 1e-14);
    }

    #[test]
    fn f2_series_reference() {
        // 30-digit quadrature reference
        let p = gp(0.75, 1.25, 2.0, 1, 1, 3.0, 0.5, 0.7);
        let v = eval_f2_series(&p, &ctrl()).unwrap();
        assert_eq!(v.strategy, Strategy::F2Series);
        assert!(rel(v.value, REF_A) < 1e-12, "{}", v.value);
    }

    const REF_A: f64 = 0.131_195_840_265_686_4;

    #[test]
    fn finite_sums_match_reference() {
        let p = gp(0.75, 1.25, 2.0, 1, 1, 3.0, 0.5, 0.7);
        assert!(rel(eval_f1_sum(&p, &ctrl()).unwrap().value, REF_A) < 1e-11);
        assert!(rel(eval_2f1_double_sum(&p, &ctrl()).unwrap().value, REF_A) < 1e-11);
    }

    #[test]
    fn strategies_agree_with_single_term_sums() {
        let p = gp(0.5, 0.75, 1.2, 1, 1, 2.0, 0.3, 0.4);
        let a = eval_f2_series(&p, &ctrl()).unwrap().value;
        assert!(rel(a, eval_f1_sum(&p, &ctrl()).unwrap().value) < 1e-10);
        let p = gp(0.5, 0.6, 1.1, 0, 0, 2.0, 0.3, 0.4);
        let a = eval_f2_series(&p, &ctrl()).unwrap().value;
        assert!(rel(a, eval_2f1_double_sum(&p, &ctrl()).unwrap().value) < 1e-10);
    }

    #[test]
    fn zero_first_parameter_collapses_double_sum() {
        let p = gp(0.0, 0.6, 1.1, 2, 1, 2.0, 0.3, 0.4);
        let a = eval_f1_sum(&p, &ctrl()).unwrap().value;
        let b = eval_2f1_double_sum(&p, &ctrl()).unwrap().value;
        assert!(rel(a, b) < 1e-10);
    }

    #[test]
    fn preconditions() {
        let p = gp(0.5, 0.6, 1.1, 0, 1, 2.0, 0.3, 0.4);
        assert!(matches!(eval_f1_sum(&p, &ctrl()), Err(Error::Precondition(_))));
        assert!(matches!(eval_2f1_double_sum(&p, &ctrl()), Err(Error::Precondition(_))));
        let p = gp(0.5, 0.6, 1.1, 1, 0, 2.0, 0.3, 0.0);
        assert!(matches!(eval_f1_sum(&p, &ctrl()), Err(Error::Precondition(_))));
        let p = gp(0.5, 0.6, 1.1, 1, 0, 2.0, 1.0, 1.0);
        assert!(matches!(eval_f2_series(&p, &ctrl()), Err(Error::Divergence(_))));
    }
}
