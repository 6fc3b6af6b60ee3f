//! Truncation policy and compensated summation shared by every series.

use serde::Serialize;

use crate::error::{Error, Result};

/// Truncation policy for all infinite series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub abs_floor: f64,
    pub max_terms: usize,
    pub consecutive_small: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-15,
            abs_floor: 1e-300,
            max_terms: 100_000,
            consecutive_small: 3,
        }
    }
}

impl SeriesControl {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_floor >= 0.0) {
            return Err(Error::Precondition("rel_tol must be > 0 and abs_floor ≥ 0".into()));
        }
        if self.max_terms == 0 || self.consecutive_small == 0 {
            return Err(Error::Precondition(
                "max_terms and consecutive_small must be ≥ 1".into(),
            ));
        }
        Ok(())
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    /// Is `mag` below the stopping threshold relative to `sum`?
    pub fn is_small(&self, mag: f64, sum: f64) -> bool {
        mag <= self.rel_tol * sum.abs() + self.abs_floor
    }
}

/// Neumaier's variant of Kahan summation, also tracking the largest partial
/// sum seen (for the cancellation ratio) and the sum of magnitudes.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
    abs_sum: f64,
    max_partial: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += x.abs();
        let partial = (self.sum + self.comp).abs();
        if partial > self.max_partial {
            self.max_partial = partial;
        }
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub fn abs_sum(&self) -> f64 {
        self.abs_sum
    }

    pub fn max_partial(&self) -> f64 {
        self.max_partial
    }

    /// max |partial sum| / |final sum|; infinite when the sum is exactly zero
    /// but some partial sum was not.
    pub fn cancellation_ratio(&self) -> f64 {
        cancellation_ratio(self.max_partial, self.value())
    }
}

pub(crate) fn cancellation_ratio(max_partial: f64, value: f64) -> f64 {
    if max_partial == 0.0 {
        1.0
    } else if value == 0.0 {
        f64::INFINITY
    } else {
        (max_partial / value.abs()).max(1.0)
    }
}

/// One recorded term of a hypergeometric-type series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypSeriesTerm {
    pub k: usize,
    pub term: f64,
    pub partial: f64,
}

/// Raw outcome of summing a single series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOutcome {
    pub value: f64,
    pub err_est: f64,
    pub terms: usize,
    pub max_partial: f64,
    pub terminated: bool,
}

impl SeriesOutcome {
    pub fn cancellation_ratio(&self) -> f64 {
        cancellation_ratio(self.max_partial, self.value)
    }
}

/// Counts consecutive below-threshold terms.
#[derive(Debug, Clone, Copy)]
pub(crate) struct StopRule {
    run: usize,
}

impl StopRule {
    pub fn new() -> Self {
        StopRule { run: 0 }
    }

    pub fn observe(&mut self, ctrl: &SeriesControl, mag: f64, sum: f64) -> bool {
        if ctrl.is_small(mag, sum) {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run >= ctrl.consecutive_small
    }
}

/// Sums t₀ + t₁ + … with t_{k+1} = t_k·ratio(k).
///
/// With `terminating = Some(n)` exactly the n+1 terms k = 0..=n are summed.
/// Otherwise the control's stopping rule applies, and in addition the term
/// ratio must have dropped below one so a transient dip cannot stop the sum.
pub(crate) fn sum_ratio_series<R>(
    ctrl: &SeriesControl,
    t0: f64,
    terminating: Option<usize>,
    mut ratio: R,
    mut trace: Option<&mut Vec<HypSeriesTerm>>,
) -> Result<SeriesOutcome>
where
    R: FnMut(usize) -> f64,
{
    let mut acc = CompensatedSum::new();
    // each term carries about (k+1) roundings from its multiplicative updates
    let mut rounding = 0.0;
    let mut term = t0;

    if let Some(n) = terminating {
        for k in 0..=n {
            acc.add(term);
            rounding += term.abs() * (k as f64 + 1.0);
            if let Some(tr) = trace.as_deref_mut() {
                tr.push(HypSeriesTerm { k, term, partial: acc.value() });
            }
            if k < n {
                term *= ratio(k);
            }
        }
        let value = acc.value();
        let err_est = 2.0 * f64::EPSILON * (rounding + acc.abs_sum()).max(value.abs());
        return Ok(SeriesOutcome {
            value,
            err_est,
            terms: n + 1,
            max_partial: acc.max_partial(),
            terminated: true,
        });
    }

    let mut stop = StopRule::new();
    for k in 0..ctrl.max_terms {
        acc.add(term);
        rounding += term.abs() * (k as f64 + 1.0);
        if let Some(tr) = trace.as_deref_mut() {
            tr.push(HypSeriesTerm { k, term, partial: acc.value() });
        }
        if !term.is_finite() {
            return Err(Error::NonConvergence(k + 1));
        }
        let r = ratio(k);
        let next = term * r;
        let small = stop.observe(ctrl, term.abs(), acc.value());
        if small && r.abs() < 1.0 {
            let value = acc.value();
            let tail = next.abs() / (1.0 - r.abs()).max(1e-3);
            let err_est = tail + 2.0 * f64::EPSILON * (rounding + acc.abs_sum()).max(value.abs());
            return Ok(SeriesOutcome {
                value,
                err_est,
                terms: k + 1,
                max_partial: acc.max_partial(),
                terminated: false,
            });
        }
        term = next;
    }
    Err(Error::NonConvergence(ctrl.max_terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_small_addends() {
        let mut s = CompensatedSum::new();
        s.add(1.0);
        for _ in 0..10 {
            s.add(1e-16);
        }
        s.add(-1.0);
        assert!((s.value() - 1e-15).abs() < 1e-30);
        assert!(s.cancellation_ratio() > 1e14);
    }

    #[test]
    fn geometric_series_stops_with_tail_estimate() {
        let ctrl = SeriesControl::default();
        let out = sum_ratio_series(&ctrl, 1.0, None, |_| 0.5, None).unwrap();
        assert!((out.value - 2.0).abs() < 1e-15);
        assert!(out.err_est > 0.0 && out.err_est < 1e-13);
    }

    #[test]
    fn terminating_series_uses_exact_term_count() {
        let ctrl = SeriesControl::default();
        let mut trace = Vec::new();
        let out = sum_ratio_series(&ctrl, 1.0, Some(4), |_| 2.0, Some(&mut trace)).unwrap();
        assert_eq!(out.terms, 5);
        assert_eq!(out.value, 31.0);
        assert_eq!(trace.len(), 5);
        assert_eq!(trace[4].partial, 31.0);
    }

    #[test]
    fn divergent_ratio_reports_non_convergence() {
        let ctrl = SeriesControl::default().with_max_terms(50);
        let err = sum_ratio_series(&ctrl, 1.0, None, |_| 1.0, None).unwrap_err();
        assert_eq!(err, Error::NonConvergence(50));
    }

    #[test]
    fn invalid_control_is_rejected() {
        let ctrl = SeriesControl { consecutive_small: 0, ..Default::default() };
        assert!(ctrl.validate().is_err());
    }
}
