//! Appell double series F₁ and F₂, their single-sum reductions, the Pfaff
//! transformation of F₁, closed ₄F₃ reductions of F₂ and its contiguous
//! shifts in the second denominator parameter.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::result::{Combination, EvalResult, Strategy, Warning};
use crate::series::{cancellation_ratio, CompensatedSum, SeriesControl, StopRule};
use crate::special::{binomial, hyp2f1, hyp_pfq, nonpositive_integer, pochhammer, real_pow};

/// F₂(a; b, b'; c, c'; w, z) = Σ (a)_{m+p}(b)_m(b')_p / ((c)_m(c')_p m! p!) w^m z^p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AppellF2Params {
    pub a: f64,
    pub b: f64,
    pub b_prime: f64,
    pub c: f64,
    pub c_prime: f64,
    pub w: f64,
    pub z: f64,
}

/// F₁(a; b, b'; c; w, z) = Σ (a)_{m+p}(b)_m(b')_p / ((c)_{m+p} m! p!) w^m z^p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AppellF1Params {
    pub a: f64,
    pub b: f64,
    pub b_prime: f64,
    pub c: f64,
    pub w: f64,
    pub z: f64,
}

/// Largest index at which a Pochhammer numerator (x)_k is still nonzero.
fn last_index(x: f64) -> Option<u64> {
    nonpositive_integer(x)
}

/// Row/column/total bounds of the nonzero part of the F₂ double series.
#[derive(Debug, Clone, Copy)]
struct F2Bounds {
    m_max: Option<u64>,
    p_max: Option<u64>,
    s_max: Option<u64>,
}

impl AppellF2Params {
    fn bounds(&self) -> F2Bounds {
        let m_max = if self.w == 0.0 { Some(0) } else { last_index(self.b) };
        let p_max = if self.z == 0.0 { Some(0) } else { last_index(self.b_prime) };
        let s_max = match (last_index(self.a), m_max, p_max) {
            (Some(n), _, _) => Some(n.min(m_max.zip(p_max).map_or(u64::MAX, |(m, p)| m + p))),
            (None, Some(m), Some(p)) => Some(m + p),
            _ => None,
        };
        F2Bounds { m_max, p_max, s_max }
    }

    /// True when the double series is a finite sum.
    pub fn terminates(&self) -> bool {
        self.bounds().s_max.is_some()
    }

    /// Distance to the convergence boundary of the non-terminating directions
    /// (infinite for finite sums).
    pub fn margin(&self) -> f64 {
        let bd = self.bounds();
        if bd.s_max.is_some() {
            return f64::INFINITY;
        }
        let wz = if bd.m_max.is_none() { self.w.abs() } else { 0.0 };
        let zz = if bd.p_max.is_none() { self.z.abs() } else { 0.0 };
        1.0 - (wz + zz)
    }

    /// Convergent flag: |w| + |z| < 1 or the series terminates; a single
    /// terminating direction only constrains the other argument.
    pub fn convergent(&self) -> bool {
        self.margin() > 0.0
    }

    fn check_poles(&self) -> Result<()> {
        let bd = self.bounds();
        for (den, reach) in [(self.c, bd.m_max), (self.c_prime, bd.p_max)] {
            if let Some(m) = nonpositive_integer(den) {
                match reach {
                    Some(r) if r <= m => {}
                    _ => return Err(Error::Pole(den)),
                }
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        let all = [self.a, self.b, self.b_prime, self.c, self.c_prime, self.w, self.z];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite Appell parameter".into()));
        }
        self.check_poles()?;
        if !self.convergent() {
            return Err(Error::Divergence(self.w.abs() + self.z.abs()));
        }
        Ok(())
    }

    /// The same function with (b, c, w) and (b', c', z) exchanged.
    pub fn swapped(&self) -> Self {
        AppellF2Params {
            a: self.a,
            b: self.b_prime,
            b_prime: self.b,
            c: self.c_prime,
            c_prime: self.c,
            w: self.z,
            z: self.w,
        }
    }
}

/// Near-boundary policy: slow-convergence warning and a 10× term cap.
fn boundary_policy(margin: f64, ctrl: &SeriesControl) -> (SeriesControl, Option<Warning>) {
    if margin.is_finite() && margin < 1e-3 {
        let raised = ctrl.with_max_terms(ctrl.max_terms.saturating_mul(10));
        (raised, Some(Warning::SlowConvergence(margin)))
    } else {
        (*ctrl, None)
    }
}

/// F₂ by its double series, summed along anti-diagonals m + p = s.
///
/// `max_terms` caps the number of diagonals. The stopping rule is applied to
/// the magnitude of each whole diagonal block.
pub fn appell_f2_double(params: &AppellF2Params, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    params.validate()?;
    let AppellF2Params { a, b, b_prime: bp, c, c_prime: cp, w, z } = *params;
    let bd = params.bounds();
    let (ctrl, warning) = boundary_policy(params.margin(), ctrl);

    let range = |s: u64| -> Option<(u64, u64)> {
        let lo = bd.p_max.map_or(0, |p| s.saturating_sub(p));
        let hi = bd.m_max.map_or(s, |m| m.min(s));
        (lo <= hi).then_some((lo, hi))
    };

    let mut acc = CompensatedSum::new();
    let mut rounding = 0.0;
    let mut terms = 0usize;
    let mut prev: Vec<f64> = vec![1.0];
    let mut prev_lo = 0u64;
    let mut prev_block = f64::INFINITY;
    let mut stop = StopRule::new();
    acc.add(1.0);
    terms += 1;

    let mut s = 1u64;
    loop {
        if let Some(smax) = bd.s_max {
            if s > smax {
                break;
            }
        }
        if s as usize > ctrl.max_terms {
            return Err(Error::NonConvergence(ctrl.max_terms));
        }
        let Some((lo, hi)) = range(s) else { break };
        let sf = s as f64;
        let mut cur = Vec::with_capacity((hi - lo + 1) as usize);
        let mut block = 0.0;
        for m in lo..=hi {
            let p = s - m;
            let t = if p >= 1 {
                let pf = p as f64;
                prev[(m - prev_lo) as usize] * (a + sf - 1.0) * (bp + pf - 1.0) * z / ((cp + pf - 1.0) * pf)
            } else {
                prev[(m - 1 - prev_lo) as usize] * (a + sf - 1.0) * (b + sf - 1.0) * w / ((c + sf - 1.0) * sf)
            };
            cur.push(t);
            acc.add(t);
            block += t.abs();
            rounding += t.abs() * (sf + 1.0);
            terms += 1;
        }
        if !block.is_finite() {
            return Err(Error::NonConvergence(s as usize));
        }
        if bd.s_max.is_none() {
            let done = stop.observe(&ctrl, block, acc.value());
            if done && block < prev_block {
                let value = acc.value();
                let q = (block / prev_block).min(0.999);
                let tail = block * q / (1.0 - q);
                let mut r = EvalResult {
                    value,
                    err_est: tail.max(block) + 2.0 * f64::EPSILON * (rounding + acc.abs_sum()),
                    strategy: Strategy::Series,
                    terms_used: terms,
                    warnings: warning.into_iter().collect(),
                    cancellation_ratio: acc.cancellation_ratio(),
                    exact: false,
                };
                r.flag_cancellation();
                return Ok(r);
            }
        }
        prev_block = block;
        prev = cur;
        prev_lo = lo;
        s += 1;
    }
    let value = acc.value();
    let mut r = EvalResult {
        value,
        err_est: 2.0 * f64::EPSILON * (rounding + acc.abs_sum()),
        strategy: Strategy::Series,
        terms_used: terms,
        warnings: warning.into_iter().collect(),
        cancellation_ratio: acc.cancellation_ratio(),
        exact: true,
    };
    r.flag_cancellation();
    Ok(r)
}

/// F₂ = Σ_m (a)_m(b)_m/((c)_m m!) w^m ₂F₁(a+m, b'; c'; z).
pub fn appell_f2_single_sum(params: &AppellF2Params, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    params.validate()?;
    let AppellF2Params { a, b, b_prime: bp, c, c_prime: cp, w, z } = *params;
    if z.abs() >= 1.0 && last_index(bp).is_none() {
        return Err(Error::Divergence(z));
    }
    let bd = params.bounds();
    let outer_last = match (bd.m_max, last_index(a)) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (Some(m), None) => Some(m),
        (None, Some(n)) => Some(n),
        (None, None) => None,
    };
    let (ctrl, warning) = boundary_policy(params.margin(), ctrl);

    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut terms = 0usize;
    let mut inner_ratio: f64 = 1.0;
    let mut exact = true;
    let mut coeff: f64 = 1.0;
    let mut prev_mag = f64::INFINITY;
    let mut stop = StopRule::new();
    let mut m = 0u64;
    loop {
        if let Some(last) = outer_last {
            if m > last {
                break;
            }
        }
        if m as usize >= ctrl.max_terms {
            return Err(Error::NonConvergence(ctrl.max_terms));
        }
        let inner = hyp2f1(a + m as f64, bp, cp, z, &ctrl)?;
        let t = coeff * inner.value;
        acc.add(t);
        err += coeff.abs() * inner.err_est + 2.0 * f64::EPSILON * t.abs() * (m as f64 + 1.0);
        terms += inner.terms_used;
        inner_ratio = inner_ratio.max(inner.cancellation_ratio);
        exact &= inner.exact;
        if outer_last.is_none() {
            let done = stop.observe(&ctrl, t.abs(), acc.value());
            if done && t.abs() < prev_mag {
                let q = (t.abs() / prev_mag).min(0.999);
                err += t.abs() * q / (1.0 - q);
                exact = false;
                break;
            }
            prev_mag = t.abs();
        }
        let mf = m as f64;
        coeff *= (a + mf) * (b + mf) * w / ((c + mf) * (mf + 1.0));
        m += 1;
    }
    let value = acc.value();
    let mut r = EvalResult {
        value,
        err_est: err + 2.0 * f64::EPSILON * acc.abs_sum(),
        strategy: Strategy::Series,
        terms_used: terms,
        warnings: warning.into_iter().collect(),
        cancellation_ratio: cancellation_ratio(acc.max_partial(), value).max(inner_ratio),
        exact,
    };
    r.flag_cancellation();
    Ok(r)
}

impl AppellF1Params {
    fn a_last(&self) -> Option<u64> {
        last_index(self.a)
    }

    /// Convergent flag: max(|w|, |z|) < 1, or termination in the directions
    /// that would otherwise diverge.
    pub fn convergent(&self) -> bool {
        if self.a_last().is_some() {
            return true;
        }
        let w_ok = self.w.abs() < 1.0 || last_index(self.b).is_some() || self.w == 0.0;
        let z_ok = self.z.abs() < 1.0 || last_index(self.b_prime).is_some() || self.z == 0.0;
        w_ok && z_ok
    }

    /// Highest total degree m + p with a nonzero term, when finite.
    fn degree_bound(&self) -> Option<u64> {
        let bw = if self.w == 0.0 { Some(0) } else { last_index(self.b) };
        let bz = if self.z == 0.0 { Some(0) } else { last_index(self.b_prime) };
        let both = bw.zip(bz).map(|(x, y)| x + y);
        match (self.a_last(), both) {
            (Some(n), Some(d)) => Some(n.min(d)),
            (Some(n), None) => Some(n),
            (None, d) => d,
        }
    }

    fn validate(&self) -> Result<()> {
        let all = [self.a, self.b, self.b_prime, self.c, self.w, self.z];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite Appell parameter".into()));
        }
        if let Some(m) = nonpositive_integer(self.c) {
            match self.degree_bound() {
                Some(d) if d <= m => {}
                _ => return Err(Error::Pole(self.c)),
            }
        }
        if !self.convergent() {
            return Err(Error::Divergence(self.w.abs().max(self.z.abs())));
        }
        Ok(())
    }
}

/// F₁ as Σ_k (a)_k(b)_k/((c)_k k!) w^k ₂F₁(a+k, b'; c+k; z), with the
/// roles of (b, w) and (b', z) exchanged when that makes the outer sum finite.
pub fn appell_f1(params: &AppellF1Params, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    params.validate()?;
    let mut p = *params;
    let outer_finite = |q: &AppellF1Params| last_index(q.b).is_some() || q.w == 0.0;
    if !outer_finite(&p) && (last_index(p.b_prime).is_some() || p.z == 0.0) {
        std::mem::swap(&mut p.b, &mut p.b_prime);
        std::mem::swap(&mut p.w, &mut p.z);
    }
    let AppellF1Params { a, b, b_prime: bp, c, w, z } = p;
    let outer_last = match (if w == 0.0 { Some(0) } else { last_index(b) }, last_index(a)) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    // a finite degree bound means no term beyond total degree d survives
    let deg = p.degree_bound();

    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut terms = 0usize;
    let mut inner_ratio: f64 = 1.0;
    let mut exact = true;
    let mut coeff: f64 = 1.0;
    let mut prev_mag = f64::INFINITY;
    let mut stop = StopRule::new();
    let mut k = 0u64;
    loop {
        if let Some(last) = outer_last {
            if k > last {
                break;
            }
        }
        if k as usize >= ctrl.max_terms {
            return Err(Error::NonConvergence(ctrl.max_terms));
        }
        let kf = k as f64;
        let t = if coeff == 0.0 {
            0.0
        } else {
            let inner = if let (Some(d), Some(_)) = (deg, nonpositive_integer(c + kf)) {
                // inner series must stop by degree d − k before its pole
                let mut inner = hyp2f1_truncated(a + kf, bp, c + kf, z, d.saturating_sub(k))?;
                inner.exact = true;
                inner
            } else {
                hyp2f1(a + kf, bp, c + kf, z, ctrl)?
            };
            err += coeff.abs() * inner.err_est;
            terms += inner.terms_used;
            inner_ratio = inner_ratio.max(inner.cancellation_ratio);
            exact &= inner.exact;
            coeff * inner.value
        };
        acc.add(t);
        err += 2.0 * f64::EPSILON * t.abs() * (kf + 1.0);
        if outer_last.is_none() {
            let done = stop.observe(ctrl, t.abs(), acc.value());
            if done && t.abs() < prev_mag {
                let q = (t.abs() / prev_mag).min(0.999);
                err += t.abs() * q / (1.0 - q);
                exact = false;
                break;
            }
            prev_mag = t.abs();
        }
        coeff *= (a + kf) * (b + kf) * w / ((c + kf) * (kf + 1.0));
        k += 1;
    }
    let value = acc.value();
    let mut r = EvalResult {
        value,
        err_est: err + 2.0 * f64::EPSILON * acc.abs_sum(),
        strategy: Strategy::Series,
        terms_used: terms.max(1),
        warnings: Vec::new(),
        cancellation_ratio: cancellation_ratio(acc.max_partial(), value).max(inner_ratio),
        exact,
    };
    r.flag_cancellation();
    Ok(r)
}

/// Σ_{k=0}^{n} (a)_k(b)_k/((c)_k k!) z^k, for sums known to vanish beyond n.
fn hyp2f1_truncated(a: f64, b: f64, c: f64, z: f64, n: u64) -> Result<EvalResult> {
    let mut acc = CompensatedSum::new();
    let mut t = 1.0;
    for k in 0..=n {
        acc.add(t);
        let kf = k as f64;
        if k < n {
            let den = (c + kf) * (kf + 1.0);
            if den == 0.0 {
                return Err(Error::Pole(c));
            }
            t *= (a + kf) * (b + kf) * z / den;
        }
    }
    let value = acc.value();
    Ok(EvalResult {
        value,
        err_est: 2.0 * f64::EPSILON * acc.abs_sum() * (n as f64 + 1.0),
        strategy: Strategy::Series,
        terms_used: n as usize + 1,
        warnings: Vec::new(),
        cancellation_ratio: acc.cancellation_ratio(),
        exact: true,
    })
}

/// Right-hand side of the Pfaff transformation
/// F₁(a; b, b'; c; w, z) = (1−w)^{−a} F₁(a; c−b−b', b'; c; w/(w−1), (z−w)/(1−w)).
pub fn appell_f1_pfaff(params: &AppellF1Params, ctrl: &SeriesControl) -> Result<EvalResult> {
    let AppellF1Params { a, b, b_prime: bp, c, w, z } = *params;
    if w == 1.0 {
        return Err(Error::Domain("Pfaff transformation requires w ≠ 1".into()));
    }
    let t = AppellF1Params { a, b: c - b - bp, b_prime: bp, c, w: w / (w - 1.0), z: (z - w) / (1.0 - w) };
    if !t.convergent() {
        return Err(Error::TransformDomain(format!(
            "w/(w−1) = {}, (z−w)/(1−w) = {}",
            t.w, t.z
        )));
    }
    let f = real_pow(1.0 - w, -a)?;
    Ok(appell_f1(&t, ctrl)?.scaled(f))
}

/// Does some numerator among `xs` make a hypergeometric series finite?
fn any_terminates(xs: &[f64]) -> bool {
    xs.iter().any(|&x| nonpositive_integer(x).is_some())
}

/// F₂(a; b, b; c, c; z, −z) as the single ₄F₃ series
/// ₄F₃(a/2, (a+1)/2, b, c−b; c/2, (c+1)/2, c; z²).
pub fn f2_reduce_opposite_args(a: f64, b: f64, c: f64, z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    if z.abs() >= 0.5 && !any_terminates(&[a, b]) {
        return Err(Error::Divergence(2.0 * z.abs()));
    }
    hyp_pfq(&[a / 2.0, (a + 1.0) / 2.0, b, c - b], &[c / 2.0, (c + 1.0) / 2.0, c], z * z, ctrl)
}

/// F₂(a; b, c−b; c, c; z, z) as (1−z)^{−a} ₄F₃(…; z²/(1−z)²), with the same
/// parameters as the opposite-argument reduction.
pub fn f2_reduce_equal_args(a: f64, b: f64, c: f64, z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    if z == 1.0 {
        return Err(Error::Domain("equal-argument reduction requires z ≠ 1".into()));
    }
    if z.abs() >= 0.5 && !any_terminates(&[a, b, c - b]) {
        return Err(Error::Divergence(2.0 * z.abs()));
    }
    let x = z / (1.0 - z);
    let f = real_pow(1.0 - z, -a)?;
    let r = hyp_pfq(&[a / 2.0, (a + 1.0) / 2.0, b, c - b], &[c / 2.0, (c + 1.0) / 2.0, c], x * x, ctrl)?;
    Ok(r.scaled(f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ShiftDirection {
    /// c' → c' + n
    Raise,
    /// c' → c' − n
    Lower,
}

/// F₂ with its second denominator parameter moved by ±n, written as a finite
/// combination of F₂ values whose second numerator and denominator move
/// together.
pub fn f2_contiguous_shift(
    direction: ShiftDirection,
    n: u32,
    params: &AppellF2Params,
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    let AppellF2Params { a: sigma, b_prime: a2, c_prime: b2, z, .. } = *params;
    let nn = n as u64;
    let mut comb = Combination::new();
    match direction {
        ShiftDirection::Raise => {
            let gap = b2 - a2;
            let escape = nonpositive_integer(gap).is_some_and(|g| g >= nn);
            if !(gap > 0.0 || escape) {
                return Err(Error::Precondition(format!(
                    "raising c' needs c' > b' (c' − b' = {gap})"
                )));
            }
            let pre = pochhammer(b2, nn) / pochhammer(gap, nn);
            if !pre.is_finite() {
                return Err(Error::Precondition("(c'−b')_n vanishes".into()));
            }
            for k in 0..=nn {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let coeff = pre * sign * binomial(nn, k) * pochhammer(a2, k) / pochhammer(b2, k);
                let q = AppellF2Params { b_prime: a2 + k as f64, c_prime: b2 + k as f64, ..*params };
                comb.add(coeff, &appell_f2_double(&q, ctrl)?);
            }
        }
        ShiftDirection::Lower => {
            let fall = |upto: u64| (0..=upto).map(|i| b2 - i as f64).product::<f64>();
            let den = fall(nn);
            if den == 0.0 {
                return Err(Error::Precondition(format!("c' = {b2} equals one of 0..={n}")));
            }
            if nonpositive_integer(b2 - n as f64).is_some() {
                return Err(Error::Pole(b2 - n as f64));
            }
            let mut zk = 1.0;
            for k in 0..=nn {
                let coeff = binomial(nn, k) * fall(nn - k) * pochhammer(sigma, k) * pochhammer(a2, k)
                    / pochhammer(b2, k)
                    * zk
                    / den;
                let q = AppellF2Params {
                    a: sigma + k as f64,
                    b_prime: a2 + k as f64,
                    c_prime: b2 + k as f64,
                    ..*params
                };
                comb.add(coeff, &appell_f2_double(&q, ctrl)?);
                zk *= z;
            }
        }
    }
    Ok(comb.finish(Strategy::Series))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
    }

    fn f2(a: f64, b: f64, bp: f64, c: f64, cp: f64, w: f64, z: f64) -> AppellF2Params {
        AppellF2Params { a, b, b_prime: bp, c, c_prime: cp, w, z }
    }

    #[test]
    fn f2_trivial_cases() {
        let p = f2(1.3, 0.4, 0.9, 1.1, 2.2, 0.0, 0.0);
        assert_eq!(appell_f2_double(&p, &ctrl()).unwrap().value, 1.0);
        assert_eq!(appell_f2_single_sum(&p, &ctrl()).unwrap().value, 1.0);
        let p = f2(1.3, 0.4, 0.0, 1.1, 2.2, 0.3, 0.4);
        let want = hyp2f1(1.3, 0.4, 1.1, 0.3, &ctrl()).unwrap().value;
        assert!(rel(appell_f2_double(&p, &ctrl()).unwrap().value, want) < 1e-14);
    }

    #[test]
    fn f2_closed_form_collapse() {
        // F₂(a; b, b'; b, b'; w, z) = (1−w−z)^{−a}
        let p = f2(1.0, 1.0, 1.0, 1.0, 1.0, 0.2, 0.3);
        assert!(rel(appell_f2_double(&p, &ctrl()).unwrap().value, 2.0) < 1e-12);
        assert!(rel(appell_f2_single_sum(&p, &ctrl()).unwrap().value, 2.0) < 1e-11);
        let p = f2(2.5, 0.7, 1.9, 0.7, 1.9, -0.45, 0.4);
        let want = (1.0f64 + 0.45 - 0.4).powf(-2.5);
        assert!(rel(appell_f2_double(&p, &ctrl()).unwrap().value, want) < 1e-12);
    }

    #[test]
    fn f2_reference_value() {
        // 30-digit double-series reference
        let p = f2(1.2, 0.5, 0.8, 1.3, 2.1, 0.35, -0.4);
        let want = 1.012_303_377_277_320_8;
        assert!(rel(appell_f2_double(&p, &ctrl()).unwrap().value, want) < 1e-13);
        assert!(rel(appell_f2_single_sum(&p, &ctrl()).unwrap().value, want) < 1e-12);
    }

    #[test]
    fn f2_terminating_strategies_agree() {
        let p = f2(1.2, -1.0, 0.7, 1.5, 2.5, 0.4, 0.3);
        let d = appell_f2_double(&p, &ctrl()).unwrap().value;
        let s = appell_f2_single_sum(&p, &ctrl()).unwrap().value;
        assert!(rel(d, s) < 1e-11);
    }

    #[test]
    fn f2_double_termination_term_count() {
        for (m, n) in [(0u64, 0u64), (2, 3), (4, 1)] {
            let p = f2(0.7, -(m as f64), -(n as f64), 1.5, 2.5, 3.0, -5.0);
            let d = appell_f2_double(&p, &ctrl()).unwrap();
            let s = appell_f2_single_sum(&p, &ctrl()).unwrap();
            assert!(d.terms_used as u64 <= (m + 1) * (n + 1));
            assert!(s.terms_used as u64 <= (m + 1) * (n + 1));
            assert!(d.exact);
            assert!(rel(d.value, s.value) < 1e-12);
        }
    }

    #[test]
    fn f2_divergence_and_boundary() {
        let p = f2(1.0, 0.5, 0.5, 1.5, 1.5, 0.6, 0.5);
        assert!(matches!(appell_f2_double(&p, &ctrl()), Err(Error::Divergence(_))));
        let p = f2(0.3, 0.5, 0.5, 2.5, 2.5, 0.5, 0.4995);
        let r = appell_f2_double(&p, &ctrl()).unwrap();
        assert!(r.warnings.iter().any(|w| w.code() == "SLOW-CONVERGENCE"));
    }

    #[test]
    fn f2_symmetry() {
        let p = f2(1.7, 0.3, -0.6, 2.2, 1.4, 0.25, -0.35);
        let a = appell_f2_double(&p, &ctrl()).unwrap().value;
        let b = appell_f2_double(&p.swapped(), &ctrl()).unwrap().value;
        assert!(rel(a, b) < 1e-12);
    }

    fn f1(a: f64, b: f64, bp: f64, c: f64, w: f64, z: f64) -> AppellF1Params {
        AppellF1Params { a, b, b_prime: bp, c, w, z }
    }

    #[test]
    fn f1_examples() {
        assert_eq!(appell_f1(&f1(0.4, 0.5, 0.6, 1.7, 0.0, 0.0), &ctrl()).unwrap().value, 1.0);
        let v = appell_f1(&f1(0.4, 0.5, 0.0, 1.7, 0.6, 0.3), &ctrl()).unwrap().value;
        let want = hyp2f1(0.4, 0.5, 1.7, 0.6, &ctrl()).unwrap().value;
        assert!(rel(v, want) < 1e-14);
        let v = appell_f1(&f1(1.0, 1.0, 1.0, 2.0, 0.5, 0.5), &ctrl()).unwrap().value;
        assert!(rel(v, 2.0) < 1e-12);
    }

    #[test]
    fn f1_reference_value() {
        // 30-digit reference
        let v = appell_f1(&f1(1.5, 0.5, 0.25, 3.0, 0.3, 0.2), &ctrl()).unwrap().value;
        assert!(rel(v, 1.118_123_870_796_314_1) < 1e-13, "{v}");
    }

    #[test]
    fn f1_terminating_a_allows_large_arguments() {
        let p = f1(-2.0, 0.5, 1.5, 1.3, 3.0, -4.0);
        let v = appell_f1(&p, &ctrl()).unwrap();
        // direct finite double sum
        let fact = crate::special::factorial;
        let mut s = 0.0;
        for m in 0..=2u64 {
            for q in 0..=(2 - m) {
                s += pochhammer(-2.0, m + q) * pochhammer(0.5, m) * pochhammer(1.5, q)
                    / (pochhammer(1.3, m + q) * fact(m) * fact(q))
                    * 3f64.powi(m as i32)
                    * (-4f64).powi(q as i32);
            }
        }
        assert!(rel(v.value, s) < 1e-13, "{} vs {s}", v.value);
    }

    #[test]
    fn pfaff_examples() {
        let p = f1(0.0, 0.5, 0.6, 1.7, 0.3, 0.2);
        assert_eq!(appell_f1_pfaff(&p, &ctrl()).unwrap().value, 1.0);
        let p = f1(0.8, 1.1, 0.6, 2.2, 0.0, 0.4);
        let a = appell_f1(&p, &ctrl()).unwrap().value;
        let b = appell_f1_pfaff(&p, &ctrl()).unwrap().value;
        assert!(rel(a, b) < 1e-10);
        let p = f1(1.5, 0.5, 0.25, 3.0, 0.3, 0.2);
        let a = appell_f1(&p, &ctrl()).unwrap().value;
        let b = appell_f1_pfaff(&p, &ctrl()).unwrap().value;
        assert!(rel(a, b) < 1e-10);
    }

    #[test]
    fn pfaff_transform_domain() {
        let p = f1(0.5, 0.5, 0.6, 1.7, 0.9, -0.95);
        assert!(matches!(appell_f1_pfaff(&p, &ctrl()), Err(Error::TransformDomain(_))));
    }

    #[test]
    fn opposite_argument_reduction() {
        assert_eq!(f2_reduce_opposite_args(1.3, 0.7, 2.1, 0.0, &ctrl()).unwrap().value, 1.0);
        let v = f2_reduce_opposite_args(1.3, 0.0, 2.1, 0.3, &ctrl()).unwrap().value;
        let d = appell_f2_double(&f2(1.3, 0.0, 0.0, 2.1, 2.1, 0.3, -0.3), &ctrl()).unwrap().value;
        assert_eq!(v, 1.0);
        assert!(rel(d, 1.0) < 1e-15);
        let v = f2_reduce_opposite_args(1.3, 0.7, 2.1, 0.3, &ctrl()).unwrap().value;
        let d = appell_f2_double(&f2(1.3, 0.7, 0.7, 2.1, 2.1, 0.3, -0.3), &ctrl()).unwrap().value;
        assert!(rel(v, d) < 1e-10);
    }

    #[test]
    fn equal_argument_reduction() {
        assert_eq!(f2_reduce_equal_args(0.9, 0.6, 2.4, 0.0, &ctrl()).unwrap().value, 1.0);
        assert_eq!(f2_reduce_equal_args(0.0, 0.6, 2.4, 0.3, &ctrl()).unwrap().value, 1.0);
        let v = f2_reduce_equal_args(0.9, 0.6, 2.4, 0.25, &ctrl()).unwrap().value;
        let d = appell_f2_double(&f2(0.9, 0.6, 1.8, 2.4, 2.4, 0.25, 0.25), &ctrl()).unwrap().value;
        assert!(rel(v, d) < 1e-10);
    }

    #[test]
    fn contiguous_shifts() {
        let base = f2(1.1, 0.5, 0.4, 1.5, 2.5, 0.2, 0.2);
        let d0 = appell_f2_double(&base, &ctrl()).unwrap().value;
        for dir in [ShiftDirection::Raise, ShiftDirection::Lower] {
            assert!(rel(f2_contiguous_shift(dir, 0, &base, &ctrl()).unwrap().value, d0) < 1e-14);
        }
        for n in 1..=3u32 {
            let up = f2_contiguous_shift(ShiftDirection::Raise, n, &base, &ctrl()).unwrap().value;
            let want = appell_f2_double(&AppellF2Params { c_prime: 2.5 + n as f64, ..base }, &ctrl()).unwrap().value;
            assert!(rel(up, want) < 1e-9, "raise {n}");
        }
        let down = f2_contiguous_shift(ShiftDirection::Lower, 1, &base, &ctrl()).unwrap().value;
        let want = appell_f2_double(&AppellF2Params { c_prime: 1.5, ..base }, &ctrl()).unwrap().value;
        assert!(rel(down, want) < 1e-9);
    }

    #[test]
    fn contiguous_preconditions() {
        let base = f2(1.1, 0.5, 2.7, 1.5, 2.5, 0.2, 0.2);
        assert!(matches!(
            f2_contiguous_shift(ShiftDirection::Raise, 1, &base, &ctrl()),
            Err(Error::Precondition(_))
        ));
        let base = f2(1.1, 0.5, 0.4, 1.5, 2.0, 0.2, 0.2);
        assert!(f2_contiguous_shift(ShiftDirection::Lower, 2, &base, &ctrl()).is_err());
    }
}
