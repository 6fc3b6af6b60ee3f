use super::nonpositive_integer;
use crate::error::{Error, Result};
use crate::result::{EvalResult, Strategy};
use crate::series::{sum_ratio_series, HypSeriesTerm, SeriesControl, SeriesOutcome};

/// Number of the last nonzero term when some numerator parameter is −n.
fn termination_index(num: &[f64]) -> Option<u64> {
    num.iter().filter_map(|&a| nonpositive_integer(a)).min()
}

fn check_poles(den: &[f64], last: Option<u64>) -> Result<()> {
    for &d in den {
        if let Some(m) = nonpositive_integer(d) {
            // (d)_k vanishes once k > m; a finite sum ending at k ≤ m is fine
            match last {
                Some(n) if n <= m => {}
                _ => return Err(Error::Pole(d)),
            }
        }
    }
    Ok(())
}

/// Sum of pFq(num; den; z) as a raw outcome, without allocation.
pub(crate) fn pfq_outcome(
    num: &[f64],
    den: &[f64],
    z: f64,
    ctrl: &SeriesControl,
    trace: Option<&mut Vec<HypSeriesTerm>>,
) -> Result<SeriesOutcome> {
    if !z.is_finite() || num.iter().chain(den).any(|x| !x.is_finite()) {
        return Err(Error::Domain("non-finite hypergeometric argument".into()));
    }
    let last = termination_index(num);
    check_poles(den, last)?;
    if last.is_none() {
        if z == 0.0 {
            return Ok(SeriesOutcome {
                value: 1.0,
                err_est: 0.0,
                terms: 1,
                max_partial: 1.0,
                terminated: true,
            });
        }
        let (p, q) = (num.len(), den.len());
        if p > q + 1 || (p == q + 1 && z.abs() >= 1.0) {
            return Err(Error::Divergence(z));
        }
    }
    let ratio = |k: usize| {
        let kf = k as f64;
        let mut r = z / (kf + 1.0);
        for &a in num {
            r *= a + kf;
        }
        for &b in den {
            r /= b + kf;
        }
        r
    };
    sum_ratio_series(ctrl, 1.0, last.map(|n| n as usize), ratio, trace)
}

/// Generalized hypergeometric series pFq(num; den; z).
///
/// Converges for p ≤ q, for p = q+1 with |z| < 1, and for any z when a
/// numerator parameter is a nonpositive integer (finite polynomial).
pub fn hyp_pfq(num: &[f64], den: &[f64], z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    let out = pfq_outcome(num, den, z, ctrl, None)?;
    Ok(EvalResult::from_outcome(out, Strategy::Series))
}

/// The individual terms and running sums of pFq, for inspection.
pub fn hyp_pfq_terms(
    num: &[f64],
    den: &[f64],
    z: f64,
    ctrl: &SeriesControl,
) -> Result<Vec<HypSeriesTerm>> {
    let mut trace = Vec::new();
    pfq_outcome(num, den, z, ctrl, Some(&mut trace))?;
    Ok(trace)
}

/// ₁F₁ value and error estimate, with Kummer's transformation applied for
/// negative arguments (and whenever it turns the series into a polynomial).
pub(crate) fn hyp1f1_value(a: f64, c: f64, z: f64, ctrl: &SeriesControl) -> Result<SeriesOutcome> {
    let direct = nonpositive_integer(a).is_some();
    let flipped_terminates = nonpositive_integer(c - a).is_some() && nonpositive_integer(c).is_none();
    if !direct && (flipped_terminates || z < 0.0) {
        let mut out = pfq_outcome(&[c - a], &[c], -z, ctrl, None)?;
        let e = z.exp();
        out.value *= e;
        out.max_partial *= e;
        out.err_est = out.err_est * e + 2.0 * f64::EPSILON * out.value.abs() * (1.0 + z.abs());
        out.terminated = false;
        return Ok(out);
    }
    pfq_outcome(&[a], &[c], z, ctrl, None)
}

/// Kummer's function ₁F₁(a; c; z).
pub fn hyp1f1(a: f64, c: f64, z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    let out = hyp1f1_value(a, c, z, ctrl)?;
    Ok(EvalResult::from_outcome(out, Strategy::Series))
}

/// Gauss function ₂F₁(a, b; c; z).
///
/// Terminating series are summed for any z. Otherwise |z| < 1 is required;
/// for z < −1/2 the Pfaff transformation maps the argument into (1/3, 1/2).
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    let terminating = nonpositive_integer(a).is_some() || nonpositive_integer(b).is_some();
    if !terminating && z < -0.5 && z > -1.0 {
        check_poles(&[c], None)?;
        let mut out = pfq_outcome(&[a, c - b], &[c], z / (z - 1.0), ctrl, None)?;
        let f = (1.0 - z).powf(-a);
        out.value *= f;
        out.max_partial *= f;
        out.err_est = out.err_est * f + 4.0 * f64::EPSILON * out.value.abs();
        return Ok(EvalResult::from_outcome(out, Strategy::Series));
    }
    let out = pfq_outcome(&[a, b], &[c], z, ctrl, None)?;
    Ok(EvalResult::from_outcome(out, Strategy::Series))
}
