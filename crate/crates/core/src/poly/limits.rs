//! Identity checks among the terminating forms, including those stated as
//! limits j → 0, which are probed at small real j and extrapolated.

use serde::{Deserialize, Serialize};

use super::{double_polynomial, poly_gordon, PolyGordonParams};
use crate::error::{Error, Result};
use crate::gordon::Sign;
use crate::report::{point, IdentityReport};
use crate::series::SeriesControl;
use crate::special::{factorial, gamma, hyp2f1, hyp_pfq, nonpositive_integer, pochhammer};

/// Probe offsets used for limits and removable singularities.
pub const PROBES: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// Identities checked by [`check_limit_identity`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum LimitIdentity {
    /// (−j)_n ₃F₂(−n, c+j, 1+j; c, 1+j−n; 1) = n! ₃F₂(−n, −j, 1+j; c, 1; 1),
    /// which lifts the condition 1+j−n > 0 of the unit-argument ₃F₂ forms.
    SoftenedCondition { n: u32, j: f64, c: f64 },
    /// Σ_k (−n)_k(c+j)_k/((c+q)_k k!) ₂F₁(−m, c+j+k; c; x)
    ///   = (q−j)_n/(c+q)_n ₃F₂(−m, c+j, 1+j−q; c, 1+j−n−q; x).
    SumBridge { n: u32, m: u32, c: f64, p: u32, sign: Sign, j: f64, x: f64 },
    /// lim_{j→0} (−j)_n ₃F₂(−n, j+1/2, j+1; q+1/2, j+1−n; 1) = (2n)!/(4^n (q+1/2)_n).
    HalfIntegerLimit { n: u32, p: u32, sign: Sign },
    /// lim_{j→0} (−j)_m ₃F₂(−n, c+j, 1+j; c, 1+j−m; 1) = n! δ_{mn}.
    OrthogonalityLimit { n: u32, m: u32, c: f64 },
}

impl LimitIdentity {
    pub fn id(&self) -> &'static str {
        match self {
            LimitIdentity::SoftenedCondition { .. } => "softened-unit-3f2",
            LimitIdentity::SumBridge { .. } => "2f1-sum-to-3f2",
            LimitIdentity::HalfIntegerLimit { .. } => "half-integer-limit",
            LimitIdentity::OrthogonalityLimit { .. } => "orthogonality-limit",
        }
    }
}

/// Extrapolate f(h) to h = 0 from values at `PROBES` by Neville's scheme.
/// Returns (value, |difference between the two highest orders|).
pub fn extrapolate_to_zero(f: impl Fn(f64) -> Result<f64>) -> Result<(f64, f64)> {
    let hs = PROBES;
    let mut t = [f(hs[0])?, f(hs[1])?, f(hs[2])?];
    let mut prev = t[2];
    for level in 1..hs.len() {
        for i in (level..hs.len()).rev() {
            let (hi, hl) = (hs[i], hs[i - level]);
            t[i] = (hl * t[i] - hi * t[i - 1]) / (hl - hi);
        }
        if level == hs.len() - 2 {
            prev = t[hs.len() - 1];
        }
    }
    let v = t[hs.len() - 1];
    Ok((v, (v - prev).abs()))
}

/// f(j) directly, or by extrapolation along j + h when j sits on a
/// removable singularity.
fn at_or_near(j: f64, singular: bool, f: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    if singular {
        Ok(extrapolate_to_zero(|h| f(j + h))?.0)
    } else {
        f(j)
    }
}

fn sides(which: &LimitIdentity, ctrl: &SeriesControl) -> Result<(f64, f64)> {
    match *which {
        LimitIdentity::SoftenedCondition { n, j, c } => {
            let nf = n as f64;
            let lhs_at = |j: f64| -> Result<f64> {
                Ok(pochhammer(-j, n as u64) * hyp_pfq(&[-nf, c + j, 1.0 + j], &[c, 1.0 + j - nf], 1.0, ctrl)?.value)
            };
            let lhs = at_or_near(j, nonpositive_integer(1.0 + j - nf).is_some(), lhs_at)?;
            let rhs = factorial(n as u64) * hyp_pfq(&[-nf, -j, 1.0 + j], &[c, 1.0], 1.0, ctrl)?.value;
            Ok((lhs, rhs))
        }
        LimitIdentity::SumBridge { n, m, c, p, sign, j, x } => {
            let q = (sign.factor() * p as i64) as f64;
            let mut lhs = 0.0;
            let mut t = 1.0;
            for k in 0..=n {
                let kf = k as f64;
                if t != 0.0 {
                    lhs += t * hyp2f1(-(m as f64), c + j + kf, c, x, ctrl)?.value;
                }
                t *= (kf - n as f64) * (c + j + kf) / ((c + q + kf) * (kf + 1.0));
            }
            let rhs_at = |j: f64| -> Result<f64> {
                let f = hyp_pfq(&[-(m as f64), c + j, 1.0 + j - q], &[c, 1.0 + j - n as f64 - q], x, ctrl)?.value;
                Ok(pochhammer(q - j, n as u64) / pochhammer(q + c, n as u64) * f)
            };
            let rhs = at_or_near(j, nonpositive_integer(1.0 + j - n as f64 - q).is_some(), rhs_at)?;
            Ok((lhs, rhs))
        }
        LimitIdentity::HalfIntegerLimit { n, p, sign } => {
            let q = (sign.factor() * p as i64) as f64;
            let nf = n as f64;
            let (lhs, _) = extrapolate_to_zero(|j| {
                Ok(pochhammer(-j, n as u64)
                    * hyp_pfq(&[-nf, j + 0.5, j + 1.0], &[q + 0.5, j + 1.0 - nf], 1.0, ctrl)?.value)
            })?;
            let rhs = factorial(2 * n as u64) / (4f64.powi(n as i32) * pochhammer(q + 0.5, n as u64));
            Ok((lhs, rhs))
        }
        LimitIdentity::OrthogonalityLimit { n, m, c } => {
            let (lhs, _) = extrapolate_to_zero(|j| {
                Ok(pochhammer(-j, m as u64)
                    * hyp_pfq(&[-(n as f64), c + j, 1.0 + j], &[c, 1.0 + j - m as f64], 1.0, ctrl)?.value)
            })?;
            let rhs = if n == m { factorial(n as u64) } else { 0.0 };
            Ok((lhs, rhs))
        }
    }
}

fn describe(which: &LimitIdentity) -> Vec<(String, f64)> {
    match *which {
        LimitIdentity::SoftenedCondition { n, j, c } => point(&[("n", n as f64), ("j", j), ("c", c)]),
        LimitIdentity::SumBridge { n, m, c, p, sign, j, x } => point(&[
            ("n", n as f64),
            ("m", m as f64),
            ("c", c),
            ("q", (sign.factor() * p as i64) as f64),
            ("j", j),
            ("x", x),
        ]),
        LimitIdentity::HalfIntegerLimit { n, p, sign } => {
            point(&[("n", n as f64), ("q", (sign.factor() * p as i64) as f64)])
        }
        LimitIdentity::OrthogonalityLimit { n, m, c } => point(&[("n", n as f64), ("m", m as f64), ("c", c)]),
    }
}

/// Evaluate both sides and report residuals; `tol` is relative, with the
/// same value used as an absolute floor for sides that vanish.
pub fn check_limit_identity(which: &LimitIdentity, tol: f64, ctrl: &SeriesControl) -> IdentityReport {
    let pt = describe(which);
    match sides(which, ctrl) {
        Ok((lhs, rhs)) => IdentityReport::compare(which.id(), pt, lhs, rhs, tol, tol),
        Err(e) => IdentityReport::inapplicable(which.id(), pt, e.to_string()),
    }
}

/// The reflection j → −j−1 of the equal-degree integral at w = z = λ, q = 0:
/// J(j' = −j−1) = Γ(c−j−1) λ^{2j+1} / Γ(c+j) · J(j). Both sides come from
/// the polynomial dispatcher; needs c − j − 1 > 0.
pub fn reflection_ratio_check(n: u32, j: i64, c: f64, lambda: f64, tol: f64, ctrl: &SeriesControl) -> IdentityReport {
    let pt = point(&[("n", n as f64), ("j", j as f64), ("c", c), ("lambda", lambda)]);
    let run = || -> Result<(f64, f64)> {
        if c - j as f64 - 1.0 <= 0.0 {
            return Err(Error::Domain("needs c − j − 1 > 0".into()));
        }
        let at = |jj: i64| PolyGordonParams::degrees(n, n, c, jj, 0, Sign::Plus, lambda, lambda, lambda);
        let lhs = poly_gordon(&at(-j - 1), ctrl)?.value;
        let base = double_polynomial(&at(j), n, ctrl)?.value;
        let rhs = gamma(c - j as f64 - 1.0)? * lambda.powi(2 * j as i32 + 1) / gamma(c + j as f64)? * base;
        Ok((lhs, rhs))
    };
    match run() {
        Ok((lhs, rhs)) => IdentityReport::compare("reflection-ratio", pt, lhs, rhs, tol, 0.0),
        Err(e) => IdentityReport::inapplicable("reflection-ratio", pt, e.to_string()),
    }
}
