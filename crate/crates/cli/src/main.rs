//! `gordon`: evaluate, compare, sweep and verify Gordon's integral.

mod output;
mod records;

use std::io;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gordon_core::gordon::eval_all;
use gordon_core::identities::{orthogonality_suite, run_identity_suite};
use gordon_core::quadrature::integrate_gordon;
use gordon_core::relations::{sweep_recurrences, Lattice, RECURRENCE_TOL};
use gordon_core::report::IdentityReport;
use gordon_core::{eval_auto, Error, GordonParams, SeriesControl, Sign};
use rayon::prelude::*;

use output::{error_record, Emitter, Format, Record};
use records::Tally;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EVAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "gordon", version, about = "Gordon's confluent hypergeometric integral")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Series term cap (overrides GORDON_MAX_TERMS).
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    /// Relative truncation tolerance of every series.
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    /// Absolute truncation floor of every series.
    #[arg(long, global = true)]
    abs_floor: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate at one point by the automatic strategy.
    #[command(allow_negative_numbers = true)]
    Eval(PointArgs),
    /// Evaluate at one point by adaptive quadrature.
    #[command(allow_negative_numbers = true)]
    Oracle {
        #[command(flatten)]
        point: PointArgs,
        /// Target relative tolerance.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Every applicable strategy and the oracle at one point.
    #[command(allow_negative_numbers = true)]
    Compare {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Evaluate over a lattice given as comma-separated values per flag
    /// (the product of all lists); the default recurrence lattice if none.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Run the identity, recurrence and orthogonality suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        /// Seed of the random identity points.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random points per identity.
        #[arg(long, default_value_t = 25)]
        points: usize,
    },
}

#[derive(Args, Debug)]
struct PointArgs {
    #[arg(long)]
    b: f64,
    /// b', the second numerator parameter.
    #[arg(long)]
    bp: f64,
    #[arg(long)]
    c: f64,
    #[arg(long, default_value_t = 0)]
    j: i64,
    #[arg(long, default_value_t = 0)]
    p: u32,
    #[arg(long, default_value = "+")]
    sign: Sign,
    #[arg(long)]
    lambda: f64,
    #[arg(long, default_value_t = 0.0)]
    w: f64,
    #[arg(long, default_value_t = 0.0)]
    z: f64,
}

impl PointArgs {
    fn params(&self) -> GordonParams {
        GordonParams {
            b: self.b,
            b_prime: self.bp,
            c: self.c,
            j: self.j,
            p: self.p,
            sign: self.sign,
            lambda: self.lambda,
            w: self.w,
            z: self.z,
        }
    }
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    bp: Option<String>,
    #[arg(long)]
    c: Option<String>,
    #[arg(long)]
    j: Option<String>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    sign: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    w: Option<String>,
    #[arg(long)]
    z: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    Identities,
    Recurrences,
    Orthogonality,
    All,
}

impl Scope {
    fn name(self) -> &'static str {
        match self {
            Scope::Identities => "identities",
            Scope::Recurrences => "recurrences",
            Scope::Orthogonality => "orthogonality",
            Scope::All => "all",
        }
    }
}

/// Failure carrying its exit status; the record is already written.
struct Exit(u8);

fn usage(msg: impl AsRef<str>) -> Exit {
    error_record("INVALID-ARGUMENTS", msg.as_ref());
    Exit(EXIT_USAGE)
}

fn eval_error(e: &Error) -> Exit {
    error_record(e.code(), &e.to_string());
    Exit(EXIT_EVAL)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // help and version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            error_record("INVALID-ARGUMENTS", e.to_string().trim());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code)) => ExitCode::from(code),
    }
}

fn control(cli: &Cli) -> Result<SeriesControl, Exit> {
    let mut ctrl = SeriesControl::default();
    if let Ok(v) = std::env::var("GORDON_MAX_TERMS") {
        ctrl.max_terms = v.trim().parse().map_err(|_| usage(format!("GORDON_MAX_TERMS={v:?} is not a count")))?;
    }
    if let Some(n) = cli.max_terms {
        ctrl.max_terms = n;
    }
    if let Some(t) = cli.rel_tol {
        ctrl.rel_tol = t;
    }
    if let Some(f) = cli.abs_floor {
        ctrl.abs_floor = f;
    }
    ctrl.validate().map_err(|e| usage(e.to_string()))?;
    Ok(ctrl)
}

/// Parameters outside the basic domain are flag errors; poles and the rest
/// are evaluation errors.
fn checked(g: GordonParams) -> Result<GordonParams, Exit> {
    g.check_domain().map_err(|e| usage(e.to_string()))?;
    Ok(g)
}

fn write(emitter: &mut Emitter<impl io::Write>, block: &[Record]) -> Result<(), Exit> {
    emitter.block(block).map_err(|e| {
        error_record("IO", &e.to_string());
        Exit(EXIT_EVAL)
    })
}

fn run(cli: &Cli) -> Result<(), Exit> {
    let ctrl = control(cli)?;
    let mut em = Emitter::new(cli.format, io::stdout().lock());
    match &cli.command {
        Command::Eval(pt) => {
            let g = checked(pt.params())?;
            let r = eval_auto(&g, &ctrl).map_err(|e| eval_error(&e))?;
            write(&mut em, &[records::eval_record(&g, &r)])
        }
        Command::Oracle { point, tol } => {
            let g = checked(point.params())?;
            let q = integrate_gordon(&g, *tol).map_err(|e| eval_error(&e))?;
            write(&mut em, &[records::oracle_record(&g, &q)])
        }
        Command::Compare { point, tol } => {
            let g = checked(point.params())?;
            let outcomes = eval_all(&g, &ctrl);
            let oracle = integrate_gordon(&g, *tol);
            if let Err(e) = &oracle {
                error_record(e.code(), &format!("oracle: {e}"));
            }
            let oracle = oracle.ok();
            if oracle.is_none() && outcomes.iter().all(|o| o.result.is_err()) {
                return Err(Exit(EXIT_EVAL));
            }
            let (rows, summary) = records::compare_records(&outcomes, oracle.as_ref());
            write(&mut em, &rows)?;
            write(&mut em, &[summary])
        }
        Command::Sweep(args) => sweep(args, &ctrl, &mut em),
        Command::Verify { scope, seed, points } => verify(*scope, *seed, *points, &ctrl, &mut em),
    }
}

fn list<T: std::str::FromStr>(name: &str, raw: &Option<String>, default: &str) -> Result<Vec<T>, Exit> {
    let s = raw.as_deref().unwrap_or(default);
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| usage(format!("--{name}: cannot parse {x:?}"))))
        .collect()
}

fn sweep_points(a: &SweepArgs) -> Result<Vec<GordonParams>, Exit> {
    let given = [&a.b, &a.bp, &a.c, &a.j, &a.p, &a.sign, &a.lambda, &a.w, &a.z];
    if given.iter().all(|x| x.is_none()) {
        return Ok(Lattice::default_81().points);
    }
    for (name, v) in [("b", &a.b), ("bp", &a.bp), ("c", &a.c), ("lambda", &a.lambda)] {
        if v.is_none() {
            return Err(usage(format!("sweep needs --{name} when any lattice flag is given")));
        }
    }
    let bs: Vec<f64> = list("b", &a.b, "")?;
    let bps: Vec<f64> = list("bp", &a.bp, "")?;
    let cs: Vec<f64> = list("c", &a.c, "")?;
    let js: Vec<i64> = list("j", &a.j, "0")?;
    let ps: Vec<u32> = list("p", &a.p, "0")?;
    let signs: Vec<Sign> = list("sign", &a.sign, "+")?;
    let lambdas: Vec<f64> = list("lambda", &a.lambda, "")?;
    let ws: Vec<f64> = list("w", &a.w, "0")?;
    let zs: Vec<f64> = list("z", &a.z, "0")?;
    let mut out = Vec::new();
    for &b in &bs {
        for &b_prime in &bps {
            for &c in &cs {
                for &j in &js {
                    for &p in &ps {
                        for &sign in &signs {
                            for &lambda in &lambdas {
                                for &w in &ws {
                                    for &z in &zs {
                                        out.push(GordonParams { b, b_prime, c, j, p, sign, lambda, w, z });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn sweep(args: &SweepArgs, ctrl: &SeriesControl, em: &mut Emitter<impl io::Write>) -> Result<(), Exit> {
    let points = sweep_points(args)?;
    let rows: Vec<(Record, bool)> = points
        .par_iter()
        .map(|g| match g.check_domain().and_then(|_| eval_auto(g, ctrl)) {
            Ok(r) => (records::eval_record(g, &r), true),
            Err(e) => (records::eval_error_record(g, e.code(), &e.to_string()), false),
        })
        .collect();
    let failed = rows.iter().filter(|(_, ok)| !ok).count();
    let rows: Vec<Record> = rows.into_iter().map(|(r, _)| r).collect();
    write(em, &rows)?;
    if failed > 0 {
        error_record("EVALUATION-FAILED", &format!("{failed} of {} sweep points failed", rows.len()));
        return Err(Exit(EXIT_EVAL));
    }
    Ok(())
}

fn verify(
    scope: Scope,
    seed: u64,
    points: usize,
    ctrl: &SeriesControl,
    em: &mut Emitter<impl io::Write>,
) -> Result<(), Exit> {
    let mut suites: Vec<(&str, Vec<IdentityReport>)> = Vec::new();
    if matches!(scope, Scope::Identities | Scope::All) {
        suites.push(("identity", run_identity_suite(seed, points, ctrl)));
    }
    if matches!(scope, Scope::Recurrences | Scope::All) {
        suites.push(("recurrence", sweep_recurrences(&Lattice::default_81(), ctrl, RECURRENCE_TOL)));
    }
    if matches!(scope, Scope::Orthogonality | Scope::All) {
        suites.push(("orthogonality", orthogonality_suite(10, ctrl)));
    }
    let mut rows = Vec::new();
    let mut by_id: Vec<(&str, String, Tally)> = Vec::new();
    let mut total = Tally::default();
    for (kind, reports) in &suites {
        for r in reports {
            rows.push(records::report_record(kind, r));
            total.add(r.status);
            match by_id.iter_mut().find(|(k, id, _)| k == kind && *id == r.id) {
                Some((_, _, t)) => t.add(r.status),
                None => {
                    let mut t = Tally::default();
                    t.add(r.status);
                    by_id.push((kind, r.id.clone(), t));
                }
            }
        }
    }
    write(em, &rows)?;
    let mut summary: Vec<Record> = by_id
        .iter()
        .map(|(kind, id, t)| records::summary_record(&format!("{kind}-summary"), id, t, scope.name(), seed))
        .collect();
    summary.push(records::summary_record("summary", "ALL", &total, scope.name(), seed));
    write(em, &summary)?;
    if total.failed > 0 {
        return Err(Exit(EXIT_VERIFY));
    }
    Ok(())
}
