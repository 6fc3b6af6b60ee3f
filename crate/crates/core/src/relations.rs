//! Recurrences among Gordon integrals with shifted parameters, checked by
//! residual against independent evaluations of every term.
//!
//! Terms are written in the shift notation J[Δb, Δb', Δc, Δj, Δq] relative to
//! a base point, where c + q (the second denominator) moves with both Δc and Δq.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gordon::{eval_auto, GordonParams, Sign};
use crate::report::{point, IdentityReport};
use crate::series::SeriesControl;
use crate::special::pochhammer;

/// Smallest |w| or |z| accepted where a relation divides by it.
pub const MIN_DIVISOR: f64 = 1e-6;

/// Tolerance of the recurrence lattice.
pub const RECURRENCE_TOL: f64 = 1e-9;

/// The recurrence relations, named by what they move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceId {
    /// Raise b and c together, as a difference in b divided by w.
    RaiseBAndC,
    /// Three-term relation in b.
    ThreeTermB,
    /// Raise b and c by a k-th finite difference in b.
    FiniteDifferenceB { k: u32 },
    /// Lower j and raise c.
    RaiseCLowerJ,
    /// Raise b at fixed c through c + 1.
    RaiseBThroughC,
    /// Raise b at fixed c through j + 1.
    RaiseB,
    /// Lower c.
    LowerC,
    /// Three-term relation in b' at q = 0.
    ThreeTermBPrime,
}

/// Which form of a relation to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    /// The form that holds; for relations printed correctly this is the printed form.
    Valid,
    /// A printed form known to differ from the valid one.
    Printed,
    /// The second reading of an ambiguous printed coefficient.
    PrintedAlternative,
}

impl RecurrenceId {
    pub const ALL: [RecurrenceId; 9] = [
        RecurrenceId::RaiseBAndC,
        RecurrenceId::ThreeTermB,
        RecurrenceId::FiniteDifferenceB { k: 1 },
        RecurrenceId::FiniteDifferenceB { k: 2 },
        RecurrenceId::RaiseCLowerJ,
        RecurrenceId::RaiseBThroughC,
        RecurrenceId::RaiseB,
        RecurrenceId::LowerC,
        RecurrenceId::ThreeTermBPrime,
    ];

    /// Catalog label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            RecurrenceId::RaiseBAndC => "A1",
            RecurrenceId::ThreeTermB => "A2",
            RecurrenceId::FiniteDifferenceB { .. } => "A3",
            RecurrenceId::RaiseCLowerJ => "A4",
            RecurrenceId::RaiseBThroughC => "A5",
            RecurrenceId::RaiseB => "A6",
            RecurrenceId::LowerC => "A7",
            RecurrenceId::ThreeTermBPrime => "A8",
        }
    }

    pub fn from_label(s: &str) -> Option<RecurrenceId> {
        Some(match s {
            "A1" => RecurrenceId::RaiseBAndC,
            "A2" => RecurrenceId::ThreeTermB,
            "A3" => RecurrenceId::FiniteDifferenceB { k: 2 },
            "A4" => RecurrenceId::RaiseCLowerJ,
            "A5" => RecurrenceId::RaiseBThroughC,
            "A6" => RecurrenceId::RaiseB,
            "A7" => RecurrenceId::LowerC,
            "A8" => RecurrenceId::ThreeTermBPrime,
            _ => return None,
        })
    }

    /// Readings worth checking: the valid form plus any printed variants.
    pub fn readings(self) -> &'static [Reading] {
        match self {
            RecurrenceId::ThreeTermB | RecurrenceId::FiniteDifferenceB { .. } | RecurrenceId::RaiseCLowerJ => {
                &[Reading::Valid]
            }
            RecurrenceId::ThreeTermBPrime => &[Reading::Printed, Reading::PrintedAlternative, Reading::Valid],
            _ => &[Reading::Printed, Reading::Valid],
        }
    }

    /// How the valid form differs from the printed one, if it does.
    pub fn correction(self) -> Option<&'static str> {
        match self {
            RecurrenceId::RaiseBAndC => Some("left term at q-1"),
            RecurrenceId::RaiseBThroughC => Some("j-1 replaces j+1 in the first and last terms"),
            RecurrenceId::RaiseB => Some("last term enters with + w(b-c)/(cb)"),
            RecurrenceId::LowerC => Some("first term at q-1; last coefficient w(b-c)/(c(c-1))"),
            RecurrenceId::ThreeTermBPrime => Some("first coefficient b'/z; neither printed reading holds"),
            _ => None,
        }
    }

    pub fn corrected(self) -> bool {
        self.correction().is_some()
    }

    /// Report id for one reading.
    pub fn report_id(self, reading: Reading) -> String {
        match (self, reading) {
            (_, Reading::Valid) => self.label().to_string(),
            (RecurrenceId::ThreeTermBPrime, Reading::Printed) => "A8:printed(b'+1-c)".into(),
            (RecurrenceId::ThreeTermBPrime, Reading::PrintedAlternative) => "A8:printed(b'-c)".into(),
            _ => format!("{}:printed", self.label()),
        }
    }

    /// Number of J-terms, left side included.
    pub fn arity(self) -> usize {
        let (_, rhs) = self.terms(&unit_point(), Reading::Valid);
        rhs.len() + 1
    }

    fn preconditions(self, p: &GordonParams) -> Result<()> {
        match self {
            RecurrenceId::RaiseBAndC | RecurrenceId::FiniteDifferenceB { .. } if p.w.abs() < MIN_DIVISOR => {
                Err(Error::Precondition(format!("|w| = {} is below {MIN_DIVISOR}", p.w.abs())))
            }
            RecurrenceId::LowerC if p.c == 1.0 => Err(Error::Precondition("c = 1".into())),
            RecurrenceId::ThreeTermBPrime if p.z.abs() < MIN_DIVISOR => {
                Err(Error::Precondition(format!("|z| = {} is below {MIN_DIVISOR}", p.z.abs())))
            }
            RecurrenceId::ThreeTermBPrime if p.q() != 0 => Err(Error::Precondition("needs q = 0".into())),
            RecurrenceId::FiniteDifferenceB { k: 0 } => Err(Error::Precondition("k must be positive".into())),
            _ => Ok(()),
        }
    }

    /// Left term and right-hand (coefficient, term) list.
    fn terms(self, p: &GordonParams, reading: Reading) -> (Shift, Vec<(f64, Shift)>) {
        let (b, bp, c, w, z) = (p.b, p.b_prime, p.c, p.w, p.z);
        let s = Shift::new;
        let printed = reading != Reading::Valid;
        match self {
            RecurrenceId::RaiseBAndC => {
                let lhs = if printed { s(1., 0., 1., 0, 0) } else { s(1., 0., 1., 0, -1) };
                (lhs, vec![(c / w, s(1., 0., 0., 0, 0)), (-c / w, s(0., 0., 0., 0, 0))])
            }
            RecurrenceId::ThreeTermB => (
                s(1., 0., 0., 0, 0),
                vec![
                    ((c - b) / b, s(-1., 0., 0., 0, 0)),
                    (w / b, s(0., 0., 0., 1, 0)),
                    ((2.0 * b - c) / b, s(0., 0., 0., 0, 0)),
                ],
            ),
            RecurrenceId::FiniteDifferenceB { k } => {
                let kf = k as f64;
                let pre = pochhammer(c + 1.0 - kf, k as u64) / w.powi(k as i32);
                let rhs = (0..=k)
                    .map(|m| {
                        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                        let binom = crate::special::binomial(k as u64, m as u64);
                        (pre * sign * binom, s(1.0 - m as f64, 0., 1.0 - kf, 0, k as i64))
                    })
                    .collect();
                (s(1., 0., 1., 0, 0), rhs)
            }
            RecurrenceId::RaiseCLowerJ => (
                s(0., 0., 0., 0, 0),
                vec![(b / c, s(1., 0., 1., -1, -1)), (-(b - c) / c, s(0., 0., 1., -1, -1))],
            ),
            RecurrenceId::RaiseBThroughC => {
                let dj = if printed { 1 } else { -1 };
                (
                    s(1., 0., 0., 0, 0),
                    vec![
                        (b / c, s(1., 0., 1., dj, -1)),
                        (w / c, s(1., 0., 1., 0, -1)),
                        (-(b - c) / c, s(0., 0., 1., dj, -1)),
                    ],
                )
            }
            RecurrenceId::RaiseB => {
                let last = w * (b - c) / (c * b);
                (
                    s(1., 0., 0., 0, 0),
                    vec![
                        (1.0, s(0., 0., 0., 0, 0)),
                        (w / b, s(0., 0., 0., 1, 0)),
                        (if printed { -last } else { last }, s(0., 0., 1., 0, -1)),
                    ],
                )
            }
            RecurrenceId::LowerC => {
                let (first, last) = if printed {
                    (s(0., 0., 0., -1, 0), w * (b - c) / (c * (1.0 - c)))
                } else {
                    (s(0., 0., 0., -1, -1), w * (b - c) / (c * (c - 1.0)))
                };
                (
                    s(0., 0., -1., 0, 0),
                    vec![(1.0, first), (w / (c - 1.0), s(0., 0., 0., 0, -1)), (last, s(0., 0., 1., -1, -2))],
                )
            }
            RecurrenceId::ThreeTermBPrime => {
                let first = match reading {
                    Reading::Printed => bp + 1.0 - c,
                    Reading::PrintedAlternative => bp - c,
                    Reading::Valid => bp,
                };
                (
                    s(0., 0., 0., 0, 0),
                    vec![
                        (first / z, s(0., 1., 0., -1, 0)),
                        ((bp - c) / z, s(0., -1., 0., -1, 0)),
                        ((c - 2.0 * bp) / z, s(0., 0., 0., -1, 0)),
                    ],
                )
            }
        }
    }
}

fn unit_point() -> GordonParams {
    GordonParams { b: 0.5, b_prime: 0.7, c: 1.4, j: 1, p: 0, sign: Sign::Plus, lambda: 3.0, w: 0.5, z: 0.4 }
}

/// Offsets of one J-term from the base point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shift {
    pub db: f64,
    pub db_prime: f64,
    pub dc: f64,
    pub dj: i64,
    pub dq: i64,
}

impl Shift {
    fn new(db: f64, db_prime: f64, dc: f64, dj: i64, dq: i64) -> Self {
        Shift { db, db_prime, dc, dj, dq }
    }

    /// The shifted point.
    pub fn apply(&self, p: &GordonParams) -> GordonParams {
        let q = p.q() + self.dq;
        GordonParams {
            b: p.b + self.db,
            b_prime: p.b_prime + self.db_prime,
            c: p.c + self.dc,
            j: p.j + self.dj,
            p: q.unsigned_abs() as u32,
            sign: if q < 0 { Sign::Minus } else { Sign::Plus },
            ..*p
        }
    }

    /// Readable name such as J[b+1, b', c+1, j, q-1].
    pub fn name(&self) -> String {
        fn part(base: &str, d: f64) -> String {
            match d {
                0.0 => base.to_string(),
                d if d > 0.0 => format!("{base}+{d}"),
                d => format!("{base}{d}"),
            }
        }
        format!(
            "J[{}, {}, {}, {}, {}]",
            part("b", self.db),
            part("b'", self.db_prime),
            part("c", self.dc),
            part("j", self.dj as f64),
            part("q", self.dq as f64)
        )
    }
}

fn base_point(id: RecurrenceId, p: &GordonParams) -> Vec<(String, f64)> {
    let mut pt = point(&[
        ("b", p.b),
        ("b'", p.b_prime),
        ("c", p.c),
        ("j", p.j as f64),
        ("q", p.qf()),
        ("lambda", p.lambda),
        ("w", p.w),
        ("z", p.z),
    ]);
    if let RecurrenceId::FiniteDifferenceB { k } = id {
        pt.push(("k".into(), k as f64));
    }
    pt
}

/// Check one reading of a relation at `params`, evaluating every term with
/// `eval_auto`. Shifted points outside the parameter domain give
/// `Error::ShiftedDomain` naming the term.
pub fn check_recurrence_reading(
    id: RecurrenceId,
    reading: Reading,
    params: &GordonParams,
    ctrl: &SeriesControl,
    tol: f64,
) -> Result<IdentityReport> {
    id.preconditions(params)?;
    let (lhs, rhs) = id.terms(params, reading);
    for t in std::iter::once(&lhs).chain(rhs.iter().map(|(_, t)| t)) {
        t.apply(params)
            .check()
            .map_err(|e| Error::ShiftedDomain { term: t.name(), reason: e.to_string() })?;
    }
    let left = eval_auto(&lhs.apply(params), ctrl)?.value;
    let mut right = 0.0;
    for (coeff, t) in &rhs {
        right += coeff * eval_auto(&t.apply(params), ctrl)?.value;
    }
    let r = IdentityReport::compare(id.report_id(reading), base_point(id, params), left, right, tol, 0.0);
    Ok(match reading {
        Reading::Valid => match id.correction() {
            Some(note) => r.mark_corrected().with_note(note),
            None => r,
        },
        _ => r.mark_as_printed(),
    })
}

/// Check the valid form of a relation.
pub fn check_recurrence(
    id: RecurrenceId,
    params: &GordonParams,
    ctrl: &SeriesControl,
    tol: f64,
) -> Result<IdentityReport> {
    check_recurrence_reading(id, Reading::Valid, params, ctrl, tol)
}

/// A finite parameter lattice for the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct Lattice {
    pub points: Vec<GordonParams>,
}

impl Lattice {
    /// Full product of λ ∈ {1,2,4}, w,z ∈ {±0.2λ, ±0.05λ}, c ∈ {1.3, 2.5, 3.7},
    /// j ∈ {1,2}, p ∈ {0,1}, b,b' ∈ {0.4, 1.1}: 2304 points.
    pub fn full() -> Self {
        let mut points = Vec::new();
        for i in 0..FULL_SIZE {
            points.push(full_point(i));
        }
        Lattice { points }
    }

    /// The default 81-point lattice: every (λ, c) pair nine times, with the
    /// remaining coordinates drawn from the 256 (w, z, j, p, b, b') combinations
    /// at a stride of 37 so that all combinations of each factor appear.
    pub fn default_81() -> Self {
        let points = (0..81)
            .map(|r| {
                let (lam, c) = (LAMBDAS[r % 3], CS[(r / 3) % 3]);
                let combo = (r * 37) % 256;
                lattice_point(lam, c, combo)
            })
            .collect();
        Lattice { points }
    }
}

const LAMBDAS: [f64; 3] = [1.0, 2.0, 4.0];
const CS: [f64; 3] = [1.3, 2.5, 3.7];
const FRACTIONS: [f64; 4] = [0.2, -0.2, 0.05, -0.05];
const FULL_SIZE: usize = 9 * 256;

fn full_point(i: usize) -> GordonParams {
    lattice_point(LAMBDAS[i % 3], CS[(i / 3) % 3], i / 9)
}

fn lattice_point(lam: f64, c: f64, combo: usize) -> GordonParams {
    let w = FRACTIONS[combo % 4] * lam;
    let z = FRACTIONS[(combo / 4) % 4] * lam;
    GordonParams {
        b: [0.4, 1.1][(combo / 64) % 2],
        b_prime: [0.4, 1.1][(combo / 128) % 2],
        c,
        j: 1 + ((combo / 16) % 2) as i64,
        p: ((combo / 32) % 2) as u32,
        sign: Sign::Plus,
        lambda: lam,
        w,
        z,
    }
}

/// Every reading of every relation at every lattice point, in lattice order
/// then catalog order. Points where a relation cannot be checked become
/// inapplicable reports carrying the error.
pub fn sweep_recurrences(lattice: &Lattice, ctrl: &SeriesControl, tol: f64) -> Vec<IdentityReport> {
    lattice
        .points
        .par_iter()
        .map(|p| {
            let mut out = Vec::new();
            for id in RecurrenceId::ALL {
                for &reading in id.readings() {
                    out.push(match check_recurrence_reading(id, reading, p, ctrl, tol) {
                        Ok(r) => r,
                        Err(e) => IdentityReport::inapplicable(
                            id.report_id(reading),
                            base_point(id, p),
                            format!("{}: {e}", e.code()),
                        ),
                    });
                }
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
