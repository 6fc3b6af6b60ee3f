//! Output records. Every record carries schema_version, strategy, value,
//! err_est and warnings.

use gordon_core::gordon::StrategyOutcome;
use gordon_core::quadrature::QuadratureResult;
use gordon_core::report::{rel_residual, IdentityReport, Status};
use gordon_core::{EvalResult, GordonParams, Warning};
use serde_json::{json, Value};

use crate::output::{Record, SCHEMA_VERSION};

fn head(kind: &str, strategy: &str, value: f64, err_est: f64, warnings: &[Warning]) -> Record {
    let mut r = Record::new();
    r.insert("schema_version".into(), SCHEMA_VERSION.into());
    r.insert("kind".into(), kind.into());
    r.insert("strategy".into(), strategy.into());
    r.insert("value".into(), json!(value));
    r.insert("err_est".into(), json!(err_est));
    r.insert("warnings".into(), warnings.iter().map(|w| Value::String(w.to_string())).collect());
    r
}

fn params_fields(r: &mut Record, g: &GordonParams) {
    for (k, v) in [
        ("b", json!(g.b)),
        ("bp", json!(g.b_prime)),
        ("c", json!(g.c)),
        ("j", json!(g.j)),
        ("p", json!(g.p)),
        ("sign", json!(g.sign.to_string())),
        ("lambda", json!(g.lambda)),
        ("w", json!(g.w)),
        ("z", json!(g.z)),
    ] {
        r.insert(k.into(), v);
    }
}

pub fn eval_record(g: &GordonParams, e: &EvalResult) -> Record {
    let mut r = head("eval", e.strategy.tag(), e.value, e.err_est, &e.warnings);
    r.insert("terms_used".into(), json!(e.terms_used));
    r.insert("cancellation_ratio".into(), json!(e.cancellation_ratio));
    r.insert("exact".into(), json!(e.exact));
    r.insert("error".into(), Value::Null);
    params_fields(&mut r, g);
    r
}

/// A sweep point whose evaluation failed.
pub fn eval_error_record(g: &GordonParams, code: &str, message: &str) -> Record {
    let mut r = head("eval", "NONE", f64::NAN, f64::NAN, &[]);
    r.insert("terms_used".into(), Value::Null);
    r.insert("cancellation_ratio".into(), Value::Null);
    r.insert("exact".into(), Value::Null);
    r.insert("error".into(), format!("{code}: {message}").into());
    params_fields(&mut r, g);
    r
}

pub fn oracle_record(g: &GordonParams, q: &QuadratureResult) -> Record {
    let mut r = head("oracle", "ORACLE", q.value, q.err_est, &q.warnings);
    r.insert("cutoff".into(), json!(q.cutoff));
    r.insert("subdivisions".into(), json!(q.subdivisions));
    r.insert("integrand_evals".into(), json!(q.integrand_evals));
    r.insert("cancellation_ratio".into(), json!(q.cancellation_ratio));
    params_fields(&mut r, g);
    r
}

/// Strategy rows with pairwise differences, then a summary row carrying the
/// largest pairwise relative difference as its value.
pub fn compare_records(outcomes: &[StrategyOutcome], oracle: Option<&QuadratureResult>) -> (Vec<Record>, Record) {
    let mut values: Vec<f64> = outcomes.iter().filter_map(|o| o.result.as_ref().ok().map(|r| r.value)).collect();
    if let Some(q) = oracle {
        values.push(q.value);
    }
    let max_diff = |v: f64| values.iter().map(|&u| rel_residual(u, v)).fold(0.0, f64::max);
    let vs_oracle = |v: f64| oracle.map(|q| json!(rel_residual(v, q.value))).unwrap_or(Value::Null);
    let mut rows = Vec::new();
    for o in outcomes {
        let mut r = match &o.result {
            Ok(e) => {
                let mut r = head("compare", &o.label, e.value, e.err_est, &e.warnings);
                r.insert("error".into(), Value::Null);
                r.insert("rel_diff_oracle".into(), vs_oracle(e.value));
                r.insert("max_rel_diff".into(), json!(max_diff(e.value)));
                r
            }
            Err(err) => {
                let mut r = head("compare", &o.label, f64::NAN, f64::NAN, &[]);
                r.insert("error".into(), format!("{}: {err}", err.code()).into());
                r.insert("rel_diff_oracle".into(), Value::Null);
                r.insert("max_rel_diff".into(), Value::Null);
                r
            }
        };
        r.insert("orientation".into(), json!(o.orientation));
        rows.push(r);
    }
    if let Some(q) = oracle {
        let mut r = head("compare", "ORACLE", q.value, q.err_est, &q.warnings);
        r.insert("error".into(), Value::Null);
        r.insert("rel_diff_oracle".into(), json!(0.0));
        r.insert("max_rel_diff".into(), json!(max_diff(q.value)));
        r.insert("orientation".into(), json!("as-given"));
        rows.push(r);
    }
    let overall = values.iter().map(|&v| max_diff(v)).fold(0.0, f64::max);
    let mut s = head("compare-summary", "SUMMARY", overall, 0.0, &[]);
    s.insert("strategies".into(), json!(outcomes.iter().filter(|o| o.result.is_ok()).count()));
    s.insert("failed_strategies".into(), json!(outcomes.iter().filter(|o| o.result.is_err()).count()));
    s.insert("oracle".into(), json!(oracle.is_some()));
    (rows, s)
}

/// One verification report.
pub fn report_record(kind: &str, r: &IdentityReport) -> Record {
    let mut out = head(kind, &kind.to_uppercase(), r.lhs, r.abs_residual, &[]);
    out.insert("id".into(), r.id.clone().into());
    out.insert("rhs".into(), json!(r.rhs));
    out.insert("rel_residual".into(), json!(r.rel_residual));
    out.insert("status".into(), json!(r.status));
    out.insert("pass".into(), json!(r.pass));
    out.insert("corrected".into(), json!(r.corrected));
    let pt: serde_json::Map<String, Value> = r.point.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    out.insert("point".into(), Value::Object(pt));
    out.insert("notes".into(), r.notes.clone().into());
    out
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Tally {
    pub total: usize,
    pub pass: usize,
    pub corrected: usize,
    pub failed: usize,
    pub failed_as_printed: usize,
    pub inapplicable: usize,
}

impl Tally {
    pub fn add(&mut self, s: Status) {
        self.total += 1;
        match s {
            Status::Pass => self.pass += 1,
            Status::Corrected => self.corrected += 1,
            Status::Failed => self.failed += 1,
            Status::FailedAsPrinted => self.failed_as_printed += 1,
            Status::Inapplicable => self.inapplicable += 1,
        }
    }
}

/// Summary row; the value is the number of unexpected failures.
pub fn summary_record(kind: &str, id: &str, t: &Tally, scope: &str, seed: u64) -> Record {
    let mut r = head(kind, "SUMMARY", t.failed as f64, 0.0, &[]);
    r.insert("id".into(), id.into());
    for (k, v) in [
        ("total", t.total),
        ("pass", t.pass),
        ("corrected", t.corrected),
        ("failed", t.failed),
        ("failed_as_printed", t.failed_as_printed),
        ("inapplicable", t.inapplicable),
    ] {
        r.insert(k.into(), json!(v));
    }
    r.insert("scope".into(), scope.into());
    r.insert("seed".into(), json!(seed));
    r
}
