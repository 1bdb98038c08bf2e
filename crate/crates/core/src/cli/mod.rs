//! Command-line front end. Every subcommand maps onto one library call;
//! [`run`] returns the process exit code: 0 on success, 1 when a
//! verification fails, 2 on usage errors and 3 when the work budget runs out.

mod claims;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{bound_ladder, BoundResult, CodeParams, CoverRegistry};
use crate::budget::Budget;
use crate::codes::{read_code, write_code, AnyCode, LinearCode};
use crate::covering::{covering_radius, greedy_covering_search, RadiusMethod};
use crate::error::{Error, Result};
use crate::families::{construct, FamilySpec};
use crate::insdel::insdel_report;
use crate::listdecode::max_list_size;
use crate::lrc::{classify_optimal, locality_profile, lrc_bounds, verify_r_delta, LrcParams};
use crate::oracle::{exact_a, exact_k, OracleOptions, OracleResult};

pub use claims::{binary_dimension_one, claim_ids, claims, Claim, Outcome};

#[derive(Debug, Parser)]
#[command(name = "covbound", version, about = "Covering radii, code-size bounds and exact oracles over GF(q)")]
pub struct Cli {
    /// Worker threads for parallel searches (default: one per core).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bounds on code size.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Covering radius of a code file.
    Radius {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value = "auto")]
        method: RadiusMethod,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Weight distribution of a code file.
    Weights {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Builds a named code family and writes it as a code file.
    Family {
        #[arg(long)]
        name: String,
        /// Family parameter as `key=value`; repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Heuristic code searches.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Largest number of codewords in a Hamming ball of the given radius.
    Listdecode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Insdel distance and the Singleton-type inequalities.
    Insdel {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Locality profile and Singleton-like optimality of a linear code.
    Lrc {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = 2)]
        delta: usize,
        /// Recovery sets, one per line as coordinate indices.
        #[arg(long)]
        certs: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exact A_q(n,d) or K_q(n,R) by exhaustive search.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Runs the embedded claim suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
pub enum BoundCommand {
    /// Every size bound for the parameters, tightest first.
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub n: usize,
    /// Minimum distance.
    #[arg(long, conflicts_with = "dlist")]
    pub d: Option<usize>,
    /// List-decoding radius.
    #[arg(long)]
    pub dlist: Option<usize>,
    /// List size L.
    #[arg(long, default_value_t = 1)]
    pub list: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub linear: bool,
    /// Constant for the asymptotic length-function bounds.
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// Greedy covering code with optional seeded restarts.
    Cover {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "R")]
        radius: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        restarts: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Largest code with minimum distance d.
    A {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Smallest code with covering radius R.
    K {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "R")]
        radius: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Recomputes every quoted value and compares.
    Paper {
        /// Run a single claim.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Add per-claim wall time (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::SelfCheckFailed(_) => 1,
        _ => 2,
    }
}

/// Failure of a command: a library error, or a check that ran and failed.
enum Failure {
    Lib(Error),
    Verification(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        if w == 0 {
            let _ = writeln!(err, "error: --workers must be at least 1");
            return 2;
        }
        pool = pool.num_threads(w);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let budget = Budget::from_env();
    match pool.install(|| dispatch(&cli.command, budget, out, err)) {
        Ok(()) => 0,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
    }
}

fn note_budget(err: &mut dyn Write, budget: Budget) {
    let _ = writeln!(err, "budget: {} steps", budget.limit());
}

/// JSON is written from a `serde_json::Value`, so parsing the output and
/// writing it again gives the same bytes.
fn emit_json(out: &mut dyn Write, v: &impl Serialize) -> std::io::Result<()> {
    let v = serde_json::to_value(v).map_err(std::io::Error::other)?;
    writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(std::io::Error::other)?)
}

fn no_csv(format: Format) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::BadParams("csv output is only available for `bound eval` and `verify paper`".into()));
    }
    Ok(())
}

fn load(path: &Path) -> Result<AnyCode> {
    read_code(path)
}

fn load_linear(path: &Path) -> Result<LinearCode> {
    match load(path)? {
        AnyCode::Linear(c) => Ok(c),
        AnyCode::Explicit(mut c) => {
            if !c.check_linear()? {
                return Err(Error::BadParams("code is not linear".into()));
            }
            let rows = c.words().to_vec();
            let g = crate::algebra::Matrix::from_rows(c.field(), c.n(), &rows)?.row_space_basis();
            LinearCode::new(g)
        }
    }
}

fn word_text(w: &[u8]) -> String {
    w.iter()
        .map(|&x| std::char::from_digit(x as u32, 36).unwrap_or('?'))
        .collect()
}

fn dispatch(cmd: &Command, budget: Budget, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Bound(BoundCommand::Eval(a)) => bound_eval(a, out),
        Command::Radius { code, method, format } => {
            no_csv(*format)?;
            note_budget(err, budget);
            let c = load(code)?;
            let r = covering_radius(&c, *method, budget)?;
            if *format == Format::Json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "radius: {}", r.radius)?;
                writeln!(out, "method: {}", r.method.name())?;
                writeln!(out, "exact: {}", r.exact)?;
                if let Some(w) = &r.witness {
                    writeln!(out, "farthest word: {}", word_text(w))?;
                }
            }
            Ok(())
        }
        Command::Weights { code, format } => {
            no_csv(*format)?;
            note_budget(err, budget);
            let c = load(code)?;
            let dist = c.weight_distribution(budget)?;
            if *format == Format::Json {
                emit_json(out, &json!({ "n": c.n(), "distribution": dist }))?;
            } else {
                for (w, count) in dist.iter().enumerate().filter(|(_, &c)| c > 0) {
                    writeln!(out, "{w:>4} {count}")?;
                }
            }
            Ok(())
        }
        Command::Family { name, params, out: path } => {
            note_budget(err, budget);
            let pairs = params
                .iter()
                .map(|p| {
                    p.split_once('=')
                        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                        .ok_or_else(|| Error::BadParams(format!("parameter `{p}` is not key=value")))
                })
                .collect::<Result<Vec<_>>>()?;
            let spec = FamilySpec::from_params(name, &pairs)?;
            let adv = spec.advertised()?;
            let code = construct(&spec)?;
            let text = write_code(&AnyCode::Linear(code))?;
            writeln!(err, "{name}: [{},{},{}]", adv.n, adv.k, adv.d)?;
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => write!(out, "{text}")?,
            }
            Ok(())
        }
        Command::Search(SearchCommand::Cover { q, n, radius, seed, restarts, format }) => {
            no_csv(*format)?;
            note_budget(err, budget);
            let c = greedy_covering_search(*q, *n, *radius, *seed, *restarts, budget)?;
            if *format == Format::Json {
                let words: Vec<String> = c.words().iter().map(|w| word_text(w)).collect();
                emit_json(out, &json!({ "q": q, "n": n, "radius": radius, "size": c.len(), "words": words }))?;
            } else {
                writeln!(out, "# size {} covering radius <= {radius}", c.len())?;
                write!(out, "{}", write_code(&AnyCode::Explicit(c))?)?;
            }
            Ok(())
        }
        Command::Listdecode { code, radius, format } => {
            no_csv(*format)?;
            note_budget(err, budget);
            let c = load(code)?.to_explicit(budget)?;
            let p = max_list_size(&c, *radius, budget)?;
            if *format == Format::Json {
                emit_json(out, &p)?;
            } else {
                writeln!(out, "radius: {}", p.radius)?;
                writeln!(out, "max list size: {}", p.max_count)?;
                writeln!(out, "center: {}", word_text(&p.witness_center))?;
            }
            Ok(())
        }
        Command::Insdel { code, format } => {
            no_csv(*format)?;
            note_budget(err, budget);
            let r = insdel_report(&load(code)?, budget)?;
            if *format == Format::Json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "n={} k={} linear={}", r.n, r.k, r.linear)?;
                writeln!(out, "insdel distance: {}", r.code_insdel_distance)?;
                writeln!(out, "closest pair: {} {}", word_text(&r.closest_pair.0), word_text(&r.closest_pair.1))?;
                writeln!(out, "hamming distance: {}", r.hamming_distance)?;
                for c in &r.checks {
                    let verdict = match c.holds {
                        Some(true) => "holds",
                        Some(false) => "FAILS",
                        None => "skipped",
                    };
                    write!(out, "{:<24} {:>4} <= {:<5} {verdict}", c.name, c.measured, c.bound)?;
                    if let Some(note) = &c.note {
                        write!(out, "  ({note})")?;
                    }
                    writeln!(out)?;
                }
                for b in r.size_bounds.iter().filter(|b| b.applicable) {
                    writeln!(out, "{:<24} |C| <= {}", b.name, b.value.as_ref().map(|v| v.to_string()).unwrap_or_default())?;
                }
            }
            Ok(())
        }
        Command::Lrc { code, delta, certs, format } => lrc(code, *delta, certs.as_deref(), *format, budget, out, err),
        Command::Oracle(cmd) => {
            note_budget(err, budget);
            let opts = OracleOptions { budget, ..OracleOptions::default() };
            let (r, format, what) = match cmd {
                OracleCommand::A { q, n, d, format } => (exact_a(*q, *n, *d, &opts)?, *format, format!("A_{q}({n},{d})")),
                OracleCommand::K { q, n, radius, format } => {
                    (exact_k(*q, *n, *radius, &opts)?, *format, format!("K_{q}({n},{radius})"))
                }
            };
            no_csv(format)?;
            oracle_out(&r, format, &what, out)?;
            Ok(())
        }
        Command::Verify(VerifyCommand::Paper { only, format, timings }) => {
            note_budget(err, budget);
            verify(only.as_deref(), *format, *timings, budget, out)
        }
    }
}

fn bound_eval(a: &EvalArgs, out: &mut dyn Write) -> CmdResult {
    let mut p = CodeParams::new(a.q, a.n);
    p.d = a.d;
    p.d_list = a.dlist;
    p.list = a.list;
    if a.linear || a.k.is_some() {
        p = p.linear(a.k);
        p.linear = a.linear;
    }
    let ladder = bound_ladder(&p, CoverRegistry::standard(), None, a.c)?;
    match a.format {
        Format::Json => emit_json(out, &json!({ "q": a.q, "n": a.n, "d": a.d, "d_list": a.dlist, "list": a.list, "bounds": ladder }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["name", "value", "form", "applicable", "tightest", "citation", "reason", "assumptions"])
                .map_err(csv_err)?;
            for b in &ladder {
                let (value, form) = value_pair(b);
                w.write_record([
                    b.name.as_str(),
                    &value,
                    &form,
                    &b.applicable.to_string(),
                    &b.tightest.to_string(),
                    &b.citation,
                    b.reason.as_deref().unwrap_or(""),
                    &b.assumptions.join("; "),
                ])
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Table => {
            let width = ladder.iter().map(|b| b.name.len()).max().unwrap_or(0);
            for b in &ladder {
                let mark = if b.tightest { "*" } else { " " };
                let (value, form) = value_pair(b);
                let shown = if !b.applicable {
                    "-".to_string()
                } else if form != value {
                    format!("{value} = {form}")
                } else {
                    value
                };
                write!(out, "{mark} {:<width$}  {shown}", b.name)?;
                if !b.applicable {
                    write!(out, "  (n/a: {})", b.reason.as_deref().unwrap_or(""))?;
                } else if !b.assumptions.is_empty() {
                    write!(out, "  [{}]", b.assumptions.join("; "))?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn value_pair(b: &BoundResult) -> (String, String) {
    match &b.value {
        Some(v) if b.applicable => (v.to_biguint().to_string(), v.to_string()),
        _ => (String::new(), String::new()),
    }
}

fn csv_err(e: csv::Error) -> Failure {
    Failure::Lib(Error::Io(e.to_string()))
}

fn oracle_out(r: &OracleResult, format: Format, what: &str, out: &mut dyn Write) -> std::io::Result<()> {
    if format == Format::Json {
        return emit_json(out, r);
    }
    writeln!(out, "{what} = {}", r.value)?;
    writeln!(out, "nodes: {}", r.stats.nodes)?;
    writeln!(out, "witness:")?;
    for w in r.witness.words() {
        writeln!(out, "  {}", word_text(w))?;
    }
    Ok(())
}

fn read_certs(path: &Path) -> Result<Vec<Vec<usize>>> {
    let text = std::fs::read_to_string(path)?;
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            l.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse().map_err(|_| Error::Parse {
                        line: i + 1,
                        msg: format!("`{t}` is not a coordinate index"),
                    })
                })
                .collect()
        })
        .collect()
}

fn lrc(
    path: &Path,
    delta: usize,
    certs: Option<&Path>,
    format: Format,
    budget: Budget,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    no_csv(format)?;
    note_budget(err, budget);
    let c = load_linear(path)?;
    let profile = locality_profile(&c, budget)?;
    let opt = classify_optimal(&c, delta, budget)?;
    let verdict = match certs {
        Some(p) => {
            let sets = read_certs(p)?;
            let widest = sets.iter().map(Vec::len).max().unwrap_or(0);
            let r = (widest + 1).saturating_sub(delta).max(1);
            Some(verify_r_delta(&c, r, delta, Some(&sets), budget)?)
        }
        None => None,
    };
    let bounds = lrc_bounds(&LrcParams {
        q: c.field().q(),
        n: c.n(),
        k: c.k(),
        r: opt.r,
        delta: Some(delta),
        radius: None,
        c: None,
    })?;
    if format == Format::Json {
        emit_json(out, &json!({ "profile": profile, "optimality": opt, "certificates": verdict, "bounds": bounds }))?;
    } else {
        writeln!(out, "[{},{}] over GF({})", c.n(), c.k(), c.field().q())?;
        match profile.r {
            Some(r) => writeln!(out, "locality r = {r}")?,
            None => writeln!(out, "locality: some coordinate has no recovery set")?,
        }
        writeln!(
            out,
            "(r, delta) = ({}, {}): d = {}, ceiling {}, {}",
            opt.r,
            opt.delta,
            opt.d,
            opt.ceiling,
            if opt.optimal() { "optimal".to_string() } else { format!("gap {}", opt.gap) }
        )?;
        if let Some(v) = &verdict {
            match &v.failure {
                None => writeln!(out, "certificates: valid for (r, delta) = ({}, {})", v.r, v.delta)?,
                Some(f) => writeln!(out, "certificates: coordinate {} fails: {}", f.coordinate, f.reason)?,
            }
        }
    }
    match verdict {
        Some(v) if !v.holds => Err(Failure::Verification("recovery-set certificates do not hold".into())),
        _ => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub claim_id: String,
    pub citation: String,
    pub expected: String,
    pub computed: String,
    pub verdict: String,
    /// Wall time, only with `--timings`.
    pub ms: Option<u128>,
}

/// Runs the claim suite, or one claim, sequentially in a fixed order.
pub fn run_claims(only: Option<&str>, timings: bool, budget: Budget) -> Result<Vec<ReportRow>> {
    let all = claims();
    if let Some(id) = only {
        if !all.iter().any(|c| c.id == id) {
            return Err(Error::BadParams(format!("unknown claim `{id}`")));
        }
    }
    let mut rows = Vec::new();
    for c in all.iter().filter(|c| only.is_none_or(|id| id == c.id)) {
        let start = Instant::now();
        let (computed, verdict) = match (c.run)(budget) {
            Ok(o) => (o.computed, if o.pass { "PASS" } else { "FAIL" }),
            Err(e @ Error::BudgetExceeded { .. }) => (format!("error: {e}"), "BUDGET"),
            Err(e) => (format!("error: {e}"), "FAIL"),
        };
        rows.push(ReportRow {
            claim_id: c.id.to_string(),
            citation: c.citation.to_string(),
            expected: c.expected.to_string(),
            computed,
            verdict: verdict.to_string(),
            ms: timings.then(|| start.elapsed().as_millis()),
        });
    }
    Ok(rows)
}

fn verify(only: Option<&str>, format: Format, timings: bool, budget: Budget, out: &mut dyn Write) -> CmdResult {
    let rows = run_claims(only, timings, budget)?;
    match format {
        Format::Json => emit_json(out, &rows)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["claim_id", "citation", "expected", "computed", "verdict", "ms"])
                .map_err(csv_err)?;
            for r in &rows {
                let ms = r.ms.map(|m| m.to_string()).unwrap_or_default();
                w.write_record([&r.claim_id, &r.citation, &r.expected, &r.computed, &r.verdict, &ms])
                    .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Table => {
            let id_w = rows.iter().map(|r| r.claim_id.len()).max().unwrap_or(0);
            for r in &rows {
                write!(out, "{:<6} {:<id_w$}  expected {}  computed {}", r.verdict, r.claim_id, r.expected, r.computed)?;
                if let Some(ms) = r.ms {
                    write!(out, "  {ms} ms")?;
                }
                writeln!(out)?;
            }
            let passed = rows.iter().filter(|r| r.verdict == "PASS").count();
            writeln!(out, "{passed}/{} claims pass", rows.len())?;
        }
    }
    if rows.iter().any(|r| r.verdict == "FAIL") {
        return Err(Failure::Verification("some claims failed".into()));
    }
    if rows.iter().any(|r| r.verdict == "BUDGET") {
        return Err(Failure::Budget("some claims exceeded the work budget".into()));
    }
    Ok(())
}
