use serde::Serialize;

/// Outcome class of one identity or relation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Holds as stated.
    Pass,
    /// Holds in its corrected form (the printed form does not).
    Corrected,
    /// Residual above tolerance.
    Failed,
    /// A printed variant kept for the record; it does not hold.
    FailedAsPrinted,
    /// Some term could not be evaluated at this point.
    Inapplicable,
}

/// Two-sided residual record for one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    /// Named parameter values of the point.
    pub point: Vec<(String, f64)>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub pass: bool,
    pub status: Status,
    /// The checked form differs from the printed source form.
    pub corrected: bool,
    pub notes: String,
}

/// |lhs − rhs| / max(|lhs|, |rhs|, 1e-300).
pub fn rel_residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1e-300)
}

impl IdentityReport {
    /// Compare both sides: pass ⇔ rel ≤ `tol` or abs ≤ `abs_floor`.
    pub fn compare(
        id: impl Into<String>,
        point: Vec<(String, f64)>,
        lhs: f64,
        rhs: f64,
        tol: f64,
        abs_floor: f64,
    ) -> Self {
        let abs_residual = (lhs - rhs).abs();
        let rel = rel_residual(lhs, rhs);
        let pass = lhs.is_finite() && rhs.is_finite() && (rel <= tol || abs_residual <= abs_floor);
        IdentityReport {
            id: id.into(),
            point,
            lhs,
            rhs,
            abs_residual,
            rel_residual: rel,
            pass,
            status: if pass { Status::Pass } else { Status::Failed },
            corrected: false,
            notes: String::new(),
        }
    }

    /// A check that could not be carried out.
    pub fn inapplicable(id: impl Into<String>, point: Vec<(String, f64)>, reason: impl Into<String>) -> Self {
        IdentityReport {
            id: id.into(),
            point,
            lhs: f64::NAN,
            rhs: f64::NAN,
            abs_residual: f64::NAN,
            rel_residual: f64::NAN,
            pass: false,
            status: Status::Inapplicable,
            corrected: false,
            notes: reason.into(),
        }
    }

    /// Mark the checked form as a correction of the printed one.
    pub fn mark_corrected(mut self) -> Self {
        self.corrected = true;
        if self.pass {
            self.status = Status::Corrected;
        }
        self
    }

    /// Mark the checked form as a printed variant expected to fail.
    pub fn mark_as_printed(mut self) -> Self {
        if !self.pass && self.status == Status::Failed {
            self.status = Status::FailedAsPrinted;
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes = note.into();
        self
    }
}

/// Build a named point from (name, value) pairs.
pub fn point(pairs: &[(&str, f64)]) -> Vec<(String, f64)> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}
