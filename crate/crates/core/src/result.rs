use std::fmt;

use serde::{Serialize, Serializer};

use crate::series::SeriesOutcome;

/// Which evaluation route produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// A direct hypergeometric or Appell series (library primitives).
    Series,
    /// Appell F₂ double series for the integral.
    F2Series,
    /// Finite sum of Appell F₁ values.
    F1Sum,
    /// Finite double sum of Gauss ₂F₁ values.
    TwoF1DoubleSum,
    /// A catalog closed form, carrying its public tag such as `SPECIAL-39`.
    Special(&'static str),
    /// The quadrature oracle.
    Oracle,
}

impl Strategy {
    pub fn tag(&self) -> &'static str {
        match self {
            Strategy::Series => "SERIES",
            Strategy::F2Series => "F2-SERIES",
            Strategy::F1Sum => "F1-SUM",
            Strategy::TwoF1DoubleSum => "2F1-DOUBLE-SUM",
            Strategy::Special(tag) => tag,
            Strategy::Oracle => "ORACLE",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Strategy {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Coded diagnostics attached to a result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Warning {
    /// max |partial sum| / |value| exceeded the cancellation threshold.
    Cancellation(f64),
    /// Arguments within 1e-3 of the convergence boundary; term cap raised.
    SlowConvergence(f64),
    /// Quadrature integrand changes sign; ratio of ∫|f| to |∫f|.
    OscillatoryIntegrand(f64),
}

/// Cancellation ratios above this attach a warning.
pub const CANCELLATION_THRESHOLD: f64 = 1e6;

impl Warning {
    pub fn code(&self) -> &'static str {
        match self {
            Warning::Cancellation(_) => "CANCELLATION",
            Warning::SlowConvergence(_) => "SLOW-CONVERGENCE",
            Warning::OscillatoryIntegrand(_) => "OSCILLATORY-INTEGRAND",
        }
    }
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::Cancellation(r) => write!(f, "CANCELLATION(ratio={r:e})"),
            Warning::SlowConvergence(m) => write!(f, "SLOW-CONVERGENCE(margin={m:e})"),
            Warning::OscillatoryIntegrand(r) => write!(f, "OSCILLATORY-INTEGRAND(ratio={r:e})"),
        }
    }
}

impl Serialize for Warning {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Value, error estimate and provenance of one evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub err_est: f64,
    pub strategy: Strategy,
    pub terms_used: usize,
    pub warnings: Vec<Warning>,
    /// max |partial sum| / |value| over every sum that fed the value.
    pub cancellation_ratio: f64,
    /// True when the value is a finite sum with no truncation.
    pub exact: bool,
}

impl EvalResult {
    pub fn exact_value(value: f64, strategy: Strategy) -> Self {
        EvalResult {
            value,
            err_est: 2.0 * f64::EPSILON * value.abs(),
            strategy,
            terms_used: 1,
            warnings: Vec::new(),
            cancellation_ratio: 1.0,
            exact: true,
        }
    }

    pub(crate) fn from_outcome(out: SeriesOutcome, strategy: Strategy) -> Self {
        let mut r = EvalResult {
            value: out.value,
            err_est: out.err_est,
            strategy,
            terms_used: out.terms,
            warnings: Vec::new(),
            cancellation_ratio: out.cancellation_ratio(),
            exact: out.terminated,
        };
        r.flag_cancellation();
        r
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    /// Multiply by a scalar prefactor, propagating its relative rounding.
    pub fn scaled(mut self, factor: f64) -> Self {
        self.value *= factor;
        self.err_est = self.err_est * factor.abs() + 4.0 * f64::EPSILON * self.value.abs();
        self
    }

    pub fn push_warning(&mut self, w: Warning) {
        if !self.warnings.iter().any(|x| x.code() == w.code()) {
            self.warnings.push(w);
        }
    }

    pub fn merge_diagnostics(&mut self, other: &EvalResult) {
        for w in &other.warnings {
            self.push_warning(*w);
        }
        self.terms_used += other.terms_used;
        self.exact &= other.exact;
    }

    pub(crate) fn flag_cancellation(&mut self) {
        if self.cancellation_ratio > CANCELLATION_THRESHOLD {
            let r = self.cancellation_ratio;
            self.warnings.retain(|w| w.code() != "CANCELLATION");
            self.warnings.push(Warning::Cancellation(r));
        }
    }

    pub fn has_cancellation_warning(&self) -> bool {
        self.warnings.iter().any(|w| matches!(w, Warning::Cancellation(_)))
    }
}

/// Accumulates Σ coeffᵢ·resultᵢ, tracking error, terms and cancellation.
#[derive(Debug, Clone)]
pub(crate) struct Combination {
    acc: crate::series::CompensatedSum,
    err: f64,
    terms: usize,
    warnings: Vec<Warning>,
    inner_ratio: f64,
    exact: bool,
}

impl Combination {
    pub fn new() -> Self {
        Combination {
            acc: crate::series::CompensatedSum::new(),
            err: 0.0,
            terms: 0,
            warnings: Vec::new(),
            inner_ratio: 1.0,
            exact: true,
        }
    }

    pub fn add_scalar(&mut self, v: f64) {
        self.acc.add(v);
        self.err += 2.0 * f64::EPSILON * v.abs();
        self.terms += 1;
    }

    pub fn add(&mut self, coeff: f64, r: &EvalResult) {
        let v = coeff * r.value;
        self.acc.add(v);
        self.err += coeff.abs() * r.err_est + 2.0 * f64::EPSILON * v.abs();
        self.terms += r.terms_used;
        self.inner_ratio = self.inner_ratio.max(r.cancellation_ratio);
        self.exact &= r.exact;
        for w in &r.warnings {
            if !matches!(w, Warning::Cancellation(_)) && !self.warnings.iter().any(|x| x.code() == w.code()) {
                self.warnings.push(*w);
            }
        }
    }

    pub fn finish(self, strategy: Strategy) -> EvalResult {
        let value = self.acc.value();
        let ratio = self.acc.cancellation_ratio().max(self.inner_ratio);
        let mut r = EvalResult {
            value,
            err_est: self.err + 2.0 * f64::EPSILON * self.acc.abs_sum(),
            strategy,
            terms_used: self.terms.max(1),
            warnings: self.warnings,
            cancellation_ratio: ratio,
            exact: self.exact,
        };
        r.flag_cancellation();
        r
    }
}
