//! Terminating (polynomial) cases of the integral and their Laguerre,
//! Hermite and Jacobi reformulations.
//!
//! Every value here is a finite sum, organized with k ascending and
//! multiplicative term updates so that exact zeros (orthogonality, vanishing
//! moments) come out as exact zeros.

mod hermite;
mod ladder;
mod laguerre;
mod limits;
mod polynomials;

pub use hermite::{hermite_gordon, HermiteParams};
pub use ladder::poly_gordon_derivative_ladder;
pub use laguerre::{laguerre_gordon, laguerre_moment, LaguerreParams, WFactor};
pub use limits::{check_limit_identity, reflection_ratio_check, LimitIdentity};
pub use polynomials::{hermite_even, hermite_odd, jacobi, laguerre};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gordon::{eval_catalog_entry, eval_special};
use crate::gordon::{GordonParams, Prefactor, Sign};
use crate::result::{Combination, EvalResult, Strategy};
use crate::series::SeriesControl;
use crate::special::{factorial, hyp2f1, hyp_pfq, nonpositive_integer, pochhammer, real_pow};

/// The first confluent factor ₁F₁(b; c; wx): a polynomial of degree m
/// (b = −m) or a general numerator b.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum First {
    Degree(u32),
    Numerator(f64),
}

/// Parameters of a polynomial case: b' = −n, the first factor per [`First`],
/// and ladder orders `s` (first factor, s ≤ m) and `mu` (second, μ ≤ n).
///
/// With nonzero orders the integral is
/// ∫ x^{c+j+s+μ−1} e^{−λx} ₁F₁(s−m; c+s; wx) ₁F₁(μ−n; c+q+μ; zx) dx.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolyGordonParams {
    pub first: First,
    pub n: u32,
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

impl PolyGordonParams {
    /// A polynomial case with b = −m, b' = −n and no ladder orders.
    #[allow(clippy::too_many_arguments)]
    pub fn degrees(m: u32, n: u32, c: f64, j: i64, p: u32, sign: Sign, lambda: f64, w: f64, z: f64) -> Self {
        PolyGordonParams { first: First::Degree(m), n, c, j, p, sign, lambda, w, z, s: 0, mu: 0 }
    }

    /// View a Gordon point as a polynomial case when b' (or, after the
    /// swap, b) is a nonpositive integer.
    pub fn from_gordon(g: &GordonParams) -> Option<Self> {
        let build = |g: &GordonParams| {
            let n = nonpositive_integer(g.b_prime)?;
            let first = match nonpositive_integer(g.b) {
                Some(m) => First::Degree(m as u32),
                None => First::Numerator(g.b),
            };
            Some(PolyGordonParams {
                first,
                n: n as u32,
                c: g.c,
                j: g.j,
                p: g.p,
                sign: g.sign,
                lambda: g.lambda,
                w: g.w,
                z: g.z,
                s: 0,
                mu: 0,
            })
        };
        build(g).or_else(|| build(&g.swapped()))
    }

    pub fn b(&self) -> f64 {
        match self.first {
            First::Degree(m) => -(m as f64),
            First::Numerator(b) => b,
        }
    }

    pub fn m(&self) -> Option<u32> {
        match self.first {
            First::Degree(m) => Some(m),
            First::Numerator(_) => None,
        }
    }

    pub fn q(&self) -> i64 {
        self.sign.factor() * self.p as i64
    }

    fn qf(&self) -> f64 {
        self.q() as f64
    }

    fn jf(&self) -> f64 {
        self.j as f64
    }

    fn e(&self) -> f64 {
        self.c + self.jf()
    }

    fn c2(&self) -> f64 {
        self.c + self.qf()
    }

    /// The base integral, ignoring ladder orders.
    pub fn base(&self) -> GordonParams {
        GordonParams {
            b: self.b(),
            b_prime: -(self.n as f64),
            c: self.c,
            j: self.j,
            p: self.p,
            sign: self.sign,
            lambda: self.lambda,
            w: self.w,
            z: self.z,
        }
    }

    /// The integral a ladder evaluates, as a plain Gordon point.
    pub fn ladder_target(&self) -> GordonParams {
        let (s, mu) = (self.s as i64, self.mu as i64);
        let q = self.q() + mu - s;
        GordonParams {
            b: self.b() + s as f64,
            b_prime: mu as f64 - self.n as f64,
            c: self.c + s as f64,
            j: self.j + mu,
            p: q.unsigned_abs() as u32,
            sign: if q < 0 { Sign::Minus } else { Sign::Plus },
            lambda: self.lambda,
            w: self.w,
            z: self.z,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.mu > self.n {
            return Err(Error::OrderBound(format!("mu = {} exceeds n = {}", self.mu, self.n)));
        }
        match self.first {
            First::Degree(m) if self.s > m => {
                return Err(Error::OrderBound(format!("s = {} exceeds m = {m}", self.s)));
            }
            First::Numerator(_) if self.s > 0 => {
                return Err(Error::OrderBound("s > 0 needs a polynomial first factor".into()));
            }
            _ => {}
        }
        self.base().check()
    }
}

pub(crate) fn special(tag: &'static str) -> Strategy {
    Strategy::Special(tag)
}

fn not_applicable(what: &str) -> Error {
    Error::NotApplicable(what.into())
}

fn precondition(what: String) -> Error {
    Error::Precondition(what)
}

/// (−1)^k.
pub(crate) fn parity(k: u64) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Σ_{k=from}^{deg} (−deg)_k (a)_k / ((d)_k k!) · x^k · weight(k) · inner(k),
/// k ascending with multiplicative coefficient updates. Terms whose
/// coefficient is exactly zero never evaluate `inner`.
pub(crate) fn terminating_sum(
    deg: u32,
    a: f64,
    d: f64,
    x: f64,
    from: u32,
    weight: impl Fn(u32) -> f64,
    mut inner: impl FnMut(u32) -> Result<Option<EvalResult>>,
    strategy: Strategy,
) -> Result<EvalResult> {
    let last = if x == 0.0 { 0 } else { deg };
    if let Some(m) = nonpositive_integer(d) {
        if (m as u32) < last {
            return Err(Error::Pole(d));
        }
    }
    let mut comb = Combination::new();
    let mut t = 1.0;
    for k in 0..=last {
        if k >= from {
            let coeff = t * weight(k);
            if coeff != 0.0 {
                match inner(k)? {
                    Some(r) => comb.add(coeff, &r),
                    None => comb.add_scalar(coeff),
                }
            }
        }
        let kf = k as f64;
        t *= (kf - deg as f64) * (a + kf) * x / ((d + kf) * (kf + 1.0));
    }
    Ok(comb.finish(strategy))
}

/// Polynomial-case evaluation: dispatches on the pattern to the most
/// specific finite-sum form available, falling back to the generic double
/// polynomial sum (two polynomial factors) or the one-polynomial sum.
pub fn poly_gordon(params: &PolyGordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    if params.s > 0 || params.mu > 0 {
        return poly_gordon_derivative_ladder(params, ctrl);
    }
    params.check()?;
    let g = params.base();
    if g.first_trivial() || g.second_trivial() {
        return single_factor_moment(&g, ctrl);
    }
    match params.first {
        First::Numerator(_) => one_polynomial(params, ctrl),
        First::Degree(m) => two_polynomials(params, m, ctrl),
    }
}

/// Integrals with one factor identically one.
fn single_factor_moment(g: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let mut last = None;
    for tag in ["SPECIAL-70", "SPECIAL-71", "SPECIAL-69", "SPECIAL-GAMMA"] {
        match eval_catalog_entry(tag, g, ctrl) {
            Ok(r) => return Ok(r),
            Err(e) => last = Some(e),
        }
    }
    eval_special(g, ctrl).map_err(|e| last.unwrap_or(e))
}

type Route = fn(&PolyGordonParams, u32, &SeriesControl) -> Result<EvalResult>;

fn two_polynomials(p: &PolyGordonParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    let routes: [Route; 9] = [
        both_at_rate,
        first_at_rate_matched,
        second_at_rate,
        first_at_rate,
        equal_rate_split,
        unshifted_moment,
        jacobi_form,
        |p, m, c| double_polynomial(p, m, c),
        |p, m, c| double_polynomial_by_second(p, m, c),
    ];
    let mut last = not_applicable("no polynomial route applies");
    for route in routes {
        match route(p, m, ctrl) {
            Ok(r) if r.value.is_finite() => return Ok(r),
            Ok(_) => last = Error::Domain("non-finite polynomial value".into()),
            Err(e @ (Error::NotApplicable(_) | Error::Precondition(_))) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

fn gamma_over_rate(p: &PolyGordonParams) -> Result<f64> {
    Ok(Prefactor::gamma(p.e())?.over_pow(p.lambda, p.e())?.value())
}

/// One polynomial factor b' = −n and a general b:
/// Γ(e)/(λ^{e−b}(λ−w)^b) Σ_k (−n)_k(e)_k/((c+q)_k k!)(z/λ)^k ₂F₁(−j−k, b; c; w/(w−λ)).
fn one_polynomial(p: &PolyGordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    if p.w == p.lambda {
        return Err(not_applicable("w = λ with a non-polynomial first factor"));
    }
    let (b, e) = (p.b(), p.e());
    let pre = Prefactor::gamma(e)?.over_pow(p.lambda, e - b)?.over_pow(p.lambda - p.w, b)?.value();
    let x = p.w / (p.w - p.lambda);
    let r = terminating_sum(
        p.n,
        e,
        p.c2(),
        p.z / p.lambda,
        0,
        |_| 1.0,
        |k| hyp2f1(-p.jf() - k as f64, b, p.c, x, ctrl).map(Some),
        special("SPECIAL-40"),
    )?;
    Ok(r.scaled(pre))
}

/// Two polynomial factors, summed against the first degree:
/// Γ(e)/λ^e Σ_{k≤m} (e)_k(−m)_k/((c)_k k!)(w/λ)^k ₂F₁(−n, e+k; c+q; z/λ).
pub fn double_polynomial(p: &PolyGordonParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.e();
    let r = terminating_sum(
        m,
        e,
        p.c,
        p.w / p.lambda,
        0,
        |_| 1.0,
        |k| hyp2f1(-(p.n as f64), e + k as f64, p.c2(), p.z / p.lambda, ctrl).map(Some),
        special("SPECIAL-42"),
    )?;
    Ok(r.scaled(gamma_over_rate(p)?))
}

/// The same integral summed against the second degree:
/// Γ(e)/λ^e Σ_{k≤n} (e)_k(−n)_k/((c+q)_k k!)(z/λ)^k ₂F₁(−m, e+k; c; w/λ).
pub fn double_polynomial_by_second(p: &PolyGordonParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    let e = p.e();
    let r = terminating_sum(
        p.n,
        e,
        p.c2(),
        p.z / p.lambda,
        0,
        |_| 1.0,
        |k| hyp2f1(-(m as f64), e + k as f64, p.c, p.w / p.lambda, ctrl).map(Some),
        special("SPECIAL-42"),
    )?;
    Ok(r.scaled(gamma_over_rate(p)?))
}

/// Σ_{k≤m} (−m)_k (−k)_n / k!, which equals n! δ_{mn}; summed exactly.
pub(crate) fn orthogonality_sum(m: u32, n: u32) -> f64 {
    let mut sum = 0.0;
    let mut t = 1.0; // (−m)_k / k!
    for k in 0..=m {
        if k >= n {
            sum += t * pochhammer(-(k as f64), n as u64);
        }
        t *= (k as f64 - m as f64) / (k as f64 + 1.0);
    }
    sum
}

/// w = z = λ, in order: the orthogonality sum (j = q = 0), the equal-degree
/// forms (q = 0), the j = 0 closed form and the two ₃F₂ forms at unit
/// argument.
fn both_at_rate(p: &PolyGordonParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    if !(p.w == p.lambda && p.z == p.lambda) {
        return Err(not_applicable("needs w = z = λ"));
    }
    let (n, c, lam, q, j) = (p.n, p.c, p.lambda, p.q(), p.j);
    if j == 0 && q == 0 {
        // Γ(c)/(λ^c (c)_n) Σ_k (−m)_k(−k)_n/k!
        let sum = orthogonality_sum(m, n);
        let v = if sum == 0.0 {
            0.0
        } else {
            Prefactor::gamma(c)?.over_pow(lam, c)?.value() * sum / pochhammer(c, n as u64)
        };
        return Ok(EvalResult::exact_value(v, special("SPECIAL-64")));
    }
    if q == 0 && m == n {
        if j == 1 {
            let v = Prefactor::gamma(c)?.over_pow(lam, c + 1.0)?.value() * factorial(n as u64) * (c + 2.0 * n as f64)
                / pochhammer(c, n as u64);
            return Ok(EvalResult::exact_value(v, special("SPECIAL-53")));
        }
        let nf = n as f64;
        let f = hyp_pfq(&[-nf, -p.jf(), 1.0 + p.jf()], &[c, 1.0], 1.0, ctrl)?;
        let pre = gamma_over_rate(p)? * factorial(n as u64) / pochhammer(c, n as u64);
        return Ok(f.scaled(pre).with_strategy(special("SPECIAL-52")));
    }
    if j == 0 && n >= m {
        // Γ(c)/λ^c · n!/(n−m)! · (q)_{n−m}/(c+q)_n
        let d = (n - m) as u64;
        let num = pochhammer(p.qf(), d);
        let v = if num == 0.0 {
            0.0
        } else {
            Prefactor::gamma(c)?.over_pow(lam, c)?.value() * factorial(n as u64) / factorial(d) * num
                / pochhammer(p.c2(), n as u64)
        };
        return Ok(EvalResult::exact_value(v, special("SPECIAL-49")));
    }
    let tag = if q == 0 { "SPECIAL-48" } else { "SPECIAL-47" };
    match second_at_rate_form(p, m, 1.0, ctrl) {
        Ok(r) => Ok(r.with_strategy(special(tag))),
        Err(Error::Precondition(_)) => Ok(first_at_rate_form(p, m, 1.0, ctrl)?.with_strategy(special(tag))),
        Err(e) => Err(e),
    }
}

/// z = λ: Γ(e)(q−j)_n/(λ^e(c+q)_n) ₃F₂(−m, e, 1+j−q; c, 1+j−n−q; w/λ),
/// valid when 1+j−n−q is not a nonpositive integer.
fn second_at_rate_form(p: &PolyGordonParams, m: u32, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let (j, q, nf) = (p.jf(), p.qf(), p.n as f64);
    let low = 1.0 + j - nf - q;
    if nonpositive_integer(low).is_some() {
        return Err(precondition(format!("1+j−n−q = {low} is a nonpositive integer")));
    }
    let num = pochhammer(q - j, p.n as u64);
    let den = pochhammer(p.c2(), p.n as u64);
    if den == 0.0 {
        return Err(Error::Pole(p.c2()));
    }
    let f = hyp_pfq(&[-(m as f64), p.e(), 1.0 + j - q], &[p.c, low], x, ctrl)?;
    Ok(f.scaled(gamma_over_rate(p)? * num / den))
}

/// w = λ: Γ(e)(−j)_m/(λ^e(c)_m) ₃F₂(−n, e, 1+j; c+q, 1+j−m; z/λ),
/// valid when 1+j−m is not a nonpositive integer.
fn first_at_rate_form(p: &PolyGordonParams, m: u32, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let j = p.jf();
    let low = 1.0 + j - m as f64;
    if nonpositive_integer(low).is_some() {
        return Err(precondition(format!("1+j−m = {low} is a nonpositive integer")));
    }
    let num = pochhammer(-j, m as u64);
    let den = pochhammer(p.c, m as u64);
    if den == 0.0 {
        return Err(Error::Pole(p.c));
    }
    let f = hyp_pfq(&[-(p.n as f64), p.e(), 1.0 + j], &[p.c2(), low], x, ctrl)?;
    Ok(f.scaled(gamma_over_rate(p)? * num / den))
}

/// w = λ with j = m − n ≥ 0: (−1)^{m+n} Γ(c) m!/(λ^{c+m−n}(c+q)_n) (z/λ)^n.
fn first_at_rate_matched(p: &PolyGordonParams, m: u32, _: &SeriesControl) -> Result<EvalResult> {
    if !(p.w == p.lambda && p.j == m as i64 - p.n as i64 && m >= p.n) {
        return Err(not_applicable("needs w = λ and j = m − n ≥ 0"));
    }
    let n = p.n as u64;
    let den = pochhammer(p.c2(), n);
    if den == 0.0 {
        return Err(Error::Pole(p.c2()));
    }
    let v = Prefactor::gamma(p.c)?.over_pow(p.lambda, p.e())?.value()
        * parity(m as u64 + n)
        * factorial(m as u64)
        / den
        * real_pow(p.z / p.lambda, n as f64)?;
    Ok(EvalResult::exact_value(v, special("SPECIAL-68")))
}

fn second_at_rate(p: &PolyGordonParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    if p.z != p.lambda {
        return Err(not_applicable("needs z = λ"));
    }
    Ok(second_at_rate_form(p, m, p.w / p.lambda, ctrl)?.with_strategy(special("SPECIAL-45")))
}

/// w = λ; with m = n and q = 0 the equal-degree forms, otherwise the
/// general ₃F₂ form.
fn first_at_rate(p: &PolyGordonParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    if p.w != p.lambda {
        return Err(not_applicable("needs w = λ"));
    }
    let x = p.z / p.lambda;
    if m == p.n && p.q() == 0 {
        if p.j == p.n as i64 {
            // (−1)^n Γ(c) n!/λ^{c+n} ₃F₂(−n, c+n, 1+n; c, 1; z/λ)
            let nf = p.n as f64;
            let f = hyp_pfq(&[-nf, p.c + nf, 1.0 + nf], &[p.c, 1.0], x, ctrl)?;
            let pre = Prefactor::gamma(p.c)?.over_pow(p.lambda, p.c + nf)?.value()
                * parity(p.n as u64)
                * factorial(p.n as u64);
            return Ok(f.scaled(pre).with_strategy(special("SPECIAL-67")));
        }
        return Ok(first_at_rate_form(p, m, x, ctrl)?.with_strategy(special("SPECIAL-66")));
    }
    Ok(first_at_rate_form(p, m, x, ctrl)?.with_strategy(special("SPECIAL-46")))
}

/// λ = (w+z)/2 with w ≠ z. For j = q = 0 the single sum
/// 2^cΓ(c)/(w+z)^c Σ_k (−m)_k/k! (2w/(w+z))^k ₂F₁(−n, c+k; c; 2z/(w+z));
/// otherwise, for j ≥ 0 and j − q ≥ 0, the nested finite sum in
/// (w−z)/(w+z) and −4wz/(w−z)².
fn equal_rate_split(p: &PolyGordonParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    let (k1, k2) = (p.w, p.z);
    if !((k1 + k2) / 2.0 == p.lambda && k1 != k2) {
        return Err(not_applicable("needs λ = (w+z)/2 with w ≠ z"));
    }
    let sum = k1 + k2;
    if p.j == 0 && p.q() == 0 {
        let c = p.c;
        let r = terminating_sum(
            m,
            1.0,
            1.0,
            2.0 * k1 / sum,
            0,
            |_| 1.0,
            |k| hyp2f1(-(p.n as f64), c + k as f64, c, 2.0 * k2 / sum, ctrl).map(Some),
            special("SPECIAL-62"),
        )?;
        let pre = Prefactor::gamma(c)?.times_pow(2.0, c)?.over_pow(sum, c)?.value();
        return Ok(r.scaled(pre));
    }
    if p.j < 0 || p.j < p.q() {
        return Err(not_applicable("needs j ≥ 0 and j ≥ q"));
    }
    let (j, q, c, c2) = (p.jf(), p.qf(), p.c, p.c2());
    let outer_ratio = 2.0 * k2 / (k2 - k1);
    let inner_ratio = 2.0 * k1 / (k1 - k2);
    let y = -4.0 * k1 * k2 / ((k1 - k2) * (k1 - k2));
    let imax = ((p.j - p.q()) as u32).min(p.n);
    let mut outer = Combination::new();
    let mut ti = 1.0; // (q−j)_i(−n)_i/((c+q)_i i!) ratio^i
    for i in 0..=imax {
        let fi = i as f64;
        if ti != 0.0 {
            let rmax = ((p.j + i as i64) as u32).min(m);
            let mut inner = Combination::new();
            let mut tr = 1.0; // (−m)_r(−j−i)_r/((c)_r r!) ratio^r
            for r in 0..=rmax {
                let fr = r as f64;
                if tr != 0.0 {
                    let f = hyp2f1(fr - m as f64, fi - p.n as f64, c + fr, y, ctrl)?;
                    inner.add(tr, &f);
                }
                tr *= (fr - m as f64) * (-j - fi + fr) * inner_ratio / ((c + fr) * (fr + 1.0));
            }
            outer.add(ti, &inner.finish(special("SPECIAL-60")));
        }
        ti *= (q - j + fi) * (fi - p.n as f64) * outer_ratio / ((c2 + fi) * (fi + 1.0));
    }
    let e = p.e();
    let pre = Prefactor::gamma(e)?.times_pow(2.0, e)?.over_pow(sum, e)?.value()
        * parity(m as u64)
        * real_pow((k1 - k2) / sum, (m + p.n) as f64)?;
    let tag = if p.q() == 0 && p.n as i64 <= p.j { "SPECIAL-61" } else { "SPECIAL-60" };
    Ok(outer.finish(special(tag)).scaled(pre))
}

/// j = q = 0: Γ(c)/λ^c Σ_k (−m)_k/k! (w/λ)^k ₂F₁(−n, c+k; c; z/λ).
fn unshifted_moment(p: &PolyGordonParams, m: u32, ctrl: &SeriesControl) -> Result<EvalResult> {
    if !(p.j == 0 && p.q() == 0) {
        return Err(not_applicable("needs j = q = 0"));
    }
    let c = p.c;
    let r = terminating_sum(
        m,
        1.0,
        1.0,
        p.w / p.lambda,
        0,
        |_| 1.0,
        |k| hyp2f1(-(p.n as f64), c + k as f64, c, p.z / p.lambda, ctrl).map(Some),
        special("SPECIAL-63"),
    )?;
    Ok(r.scaled(Prefactor::gamma(c)?.over_pow(p.lambda, c)?.value()))
}

/// m = n, q = 0:
/// n!Γ(e)/(λ^e(c)_n) Σ_k (e)_k(−n)_k/((c)_k k!)(z/λ)^k P_n^{(c−1, j+k−n)}(1−2w/λ).
fn jacobi_form(p: &PolyGordonParams, m: u32, _: &SeriesControl) -> Result<EvalResult> {
    if !(m == p.n && p.q() == 0) {
        return Err(not_applicable("needs m = n and q = 0"));
    }
    let (n, c, e) = (p.n, p.c, p.e());
    let den = pochhammer(c, n as u64);
    if den == 0.0 {
        return Err(Error::Pole(c));
    }
    let arg = 1.0 - 2.0 * p.w / p.lambda;
    let r = terminating_sum(
        n,
        e,
        c,
        p.z / p.lambda,
        0,
        |k| jacobi(n, c - 1.0, p.jf() + k as f64 - n as f64, arg),
        |_| Ok(None),
        special("SPECIAL-65"),
    )?;
    Ok(r.scaled(gamma_over_rate(p)? * factorial(n as u64) / den))
}

/// Entry point used by the general dispatcher: `NotApplicable` unless one
/// factor is a polynomial.
pub fn eval_polynomial_case(params: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    let p = PolyGordonParams::from_gordon(params).ok_or_else(|| not_applicable("no polynomial factor"))?;
    poly_gordon(&p, ctrl)
}

#[cfg(test)]
mod tests;
