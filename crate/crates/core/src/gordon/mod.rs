//! Gordon's integral
//!
//! ```text
//! J = ∫₀^∞ x^{c+j−1} e^{−λx} ₁F₁(b; c; wx) ₁F₁(b'; c+q; zx) dx,  q = ±p
//! ```
//!
//! evaluated by the F₂ series, two finite-sum strategies and a catalog of
//! closed forms, with automatic strategy selection.

mod catalog;
mod general;
mod params;
pub mod rewrites;

use serde::Serialize;

pub use catalog::{
    eval_catalog_entry, eval_special, matches_in_class, run_entry, CatalogClass, CatalogEntry, Orientation, CATALOG,
};
pub use general::{eval_2f1_double_sum, eval_f1_sum, eval_f2_series};
pub use params::{GordonParams, Sign};
pub(crate) use params::Prefactor;

use crate::appell::{AppellF1Params, AppellF2Params};
use crate::error::{Error, Result};
use crate::result::EvalResult;
use crate::series::SeriesControl;
use crate::special::{hyp1f1, nonpositive_integer};

/// Why a strategy is or is not applicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    #[serde(rename = "OK")]
    Ok,
    #[serde(rename = "DOMAIN")]
    Domain,
    #[serde(rename = "BOUNDARY")]
    Boundary,
    #[serde(rename = "ORDER")]
    Order,
    #[serde(rename = "ZERO-ARG")]
    ZeroArg,
    #[serde(rename = "POLE")]
    Pole,
    #[serde(rename = "PATTERN")]
    Pattern,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrategyApplicability {
    pub strategy: &'static str,
    pub applicable: bool,
    pub reason: Reason,
}

impl StrategyApplicability {
    fn new(strategy: &'static str, reason: Reason) -> Self {
        StrategyApplicability { strategy, applicable: reason == Reason::Ok, reason }
    }
}

fn terminates(x: f64) -> bool {
    nonpositive_integer(x).is_some()
}

fn f2_reason(p: &GordonParams) -> Reason {
    let f2 = AppellF2Params {
        a: p.exponent(),
        b: p.b,
        b_prime: p.b_prime,
        c: p.c,
        c_prime: p.c2(),
        w: p.w / p.lambda,
        z: p.z / p.lambda,
    };
    if f2.convergent() {
        Reason::Ok
    } else {
        Reason::Boundary
    }
}

fn f1_reason(p: &GordonParams) -> Reason {
    if p.j - p.q() < 0 {
        return Reason::Order;
    }
    if p.z == 0.0 || p.z == p.lambda {
        return Reason::ZeroArg;
    }
    let f1 = AppellF1Params {
        a: p.b,
        b: p.exponent() - p.b_prime,
        b_prime: p.b_prime,
        c: p.c,
        w: p.w / p.lambda,
        z: p.w / (p.lambda - p.z),
    };
    if f1.convergent() {
        Reason::Ok
    } else {
        Reason::Boundary
    }
}

fn double_sum_reason(p: &GordonParams) -> Reason {
    if p.j < 0 || p.j - p.q() < 0 {
        return Reason::Order;
    }
    if p.w == 0.0 || p.w == p.lambda || p.z == 0.0 || p.z == p.lambda {
        return Reason::ZeroArg;
    }
    let x = p.w * p.z / ((p.lambda - p.z) * (p.lambda - p.w));
    if x.abs() < 1.0 || terminates(p.b) || terminates(p.b_prime) {
        Reason::Ok
    } else {
        Reason::Boundary
    }
}

/// Applicability of every known strategy at a parameter point: the three
/// general strategies, then each catalog tag.
pub fn validate(params: &GordonParams) -> Vec<StrategyApplicability> {
    let mut tags: Vec<&'static str> = Vec::new();
    for e in CATALOG {
        if !tags.contains(&e.tag) {
            tags.push(e.tag);
        }
    }
    let general = ["F2-SERIES", "F1-SUM", "2F1-DOUBLE-SUM"];
    let blanket = match (params.check_domain(), params.check_poles()) {
        (Err(_), _) => Some(Reason::Domain),
        (Ok(()), Err(_)) => Some(Reason::Pole),
        _ => None,
    };
    if let Some(reason) = blanket {
        return general.iter().chain(tags.iter()).map(|s| StrategyApplicability::new(s, reason)).collect();
    }
    let mut out = vec![
        StrategyApplicability::new(general[0], f2_reason(params)),
        StrategyApplicability::new(general[1], f1_reason(params)),
        StrategyApplicability::new(general[2], double_sum_reason(params)),
    ];
    let swapped = params.swapped();
    for tag in tags {
        let hit = CATALOG
            .iter()
            .filter(|e| e.tag == tag)
            .any(|e| (e.matches)(params) || (e.matches)(&swapped));
        out.push(StrategyApplicability::new(tag, if hit { Reason::Ok } else { Reason::Pattern }));
    }
    out
}

/// Evaluate by the first successful strategy in the order: exact catalog
/// forms, terminating polynomial forms, non-terminating catalog forms, the
/// F₂ series, the F₁ sum, the ₂F₁ double sum.
pub fn eval_auto(params: &GordonParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.check()?;
    let mut failures = catalog::Failures::new();
    if let Some(r) = catalog::try_class(params, CatalogClass::Exact, ctrl, &mut failures) {
        return Ok(r);
    }
    match crate::poly::eval_polynomial_case(params, ctrl) {
        Ok(r) if r.value.is_finite() => return Ok(r),
        Ok(_) => failures.push(("POLY".into(), "non-finite value".into())),
        Err(Error::NotApplicable(_)) => {}
        Err(e) => failures.push(("POLY".into(), e.to_string())),
    }
    if let Some(r) = catalog::try_class(params, CatalogClass::NonTerminating, ctrl, &mut failures) {
        return Ok(r);
    }
    type General = fn(&GordonParams, &SeriesControl) -> Result<EvalResult>;
    let general: [(&str, General); 3] = [
        ("F2-SERIES", eval_f2_series),
        ("F1-SUM", eval_f1_sum),
        ("2F1-DOUBLE-SUM", eval_2f1_double_sum),
    ];
    for (tag, f) in general {
        match f(params, ctrl) {
            Ok(r) if r.value.is_finite() => return Ok(r),
            Ok(_) => failures.push((tag.into(), "non-finite value".into())),
            Err(e) => failures.push((tag.into(), e.to_string())),
        }
    }
    Err(Error::AllStrategiesFailed(failures))
}

/// One row of a strategy comparison.
#[derive(Debug)]
pub struct StrategyOutcome {
    pub label: String,
    pub orientation: Orientation,
    pub result: Result<EvalResult>,
}

/// Every strategy whose preconditions hold at the point: the three general
/// strategies (when applicable) and every matching catalog entry.
pub fn eval_all(params: &GordonParams, ctrl: &SeriesControl) -> Vec<StrategyOutcome> {
    let mut out = Vec::new();
    if params.check().is_err() {
        return out;
    }
    type General = fn(&GordonParams, &SeriesControl) -> Result<EvalResult>;
    let general: [(&str, Reason, General); 3] = [
        ("F2-SERIES", f2_reason(params), eval_f2_series),
        ("F1-SUM", f1_reason(params), eval_f1_sum),
        ("2F1-DOUBLE-SUM", double_sum_reason(params), eval_2f1_double_sum),
    ];
    for (label, reason, f) in general {
        if reason == Reason::Ok {
            out.push(StrategyOutcome { label: label.into(), orientation: Orientation::AsGiven, result: f(params, ctrl) });
        }
    }
    for class in [CatalogClass::Exact, CatalogClass::NonTerminating, CatalogClass::Explicit] {
        for (entry, o) in matches_in_class(params, class) {
            let result = run_entry(entry, o, params, ctrl);
            let label = match &result {
                Ok(r) => r.strategy.tag().to_string(),
                Err(_) => entry.tag.to_string(),
            };
            out.push(StrategyOutcome { label, orientation: o, result });
        }
    }
    if let Ok(r) = crate::poly::eval_polynomial_case(params, ctrl) {
        out.push(StrategyOutcome {
            label: r.strategy.tag().to_string(),
            orientation: Orientation::AsGiven,
            result: Ok(r),
        });
    }
    out
}

/// Whittaker's M_{κ,μ}(z) = e^{−z/2} z^{μ+1/2} ₁F₁(μ−κ+1/2; 1+2μ; z), z > 0.
pub fn whittaker_m(kappa: f64, mu: f64, z: f64, ctrl: &SeriesControl) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("Whittaker M needs z > 0, got {z}")));
    }
    if terminates(1.0 + 2.0 * mu) {
        return Err(Error::Domain(format!("1 + 2μ = {} is a nonpositive integer", 1.0 + 2.0 * mu)));
    }
    let f = hyp1f1(mu - kappa + 0.5, 1.0 + 2.0 * mu, z, ctrl)?.value;
    Ok(f * (-z / 2.0 + (mu + 0.5) * z.ln()).exp())
}
