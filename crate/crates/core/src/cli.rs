//! Command-line front end and the JSON interchange format.
//!
//! Exit codes are stable: 0 pass, 1 verification failure, 2 inadmissible
//! parameters or unreadable input, 3 known nonexistent (including a
//! completed exhaustive search), 4 search budget exhausted without a verdict.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::constructions as cons;
use crate::derive;
use crate::diff::{Block, Family, GridBlock, Kind, Payload, Provenance};
use crate::error::{Error, Result};
use crate::search::{self, SearchBudget, SearchOutcome, SearchReport};
use crate::verify::{self, Certificate};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_VERIFY_FAIL: u8 = 1;
pub const EXIT_INADMISSIBLE: u8 = 2;
pub const EXIT_NONEXISTENT: u8 = 3;
pub const EXIT_INCONCLUSIVE: u8 = 4;

/// On-disk form of a [`Family`], optionally carrying its certificate.
///
/// `blocks` holds integer blocks, ordered rows (ASP, PDM) or lists of
/// `[x, y]` points (GDP, GOC), depending on `kind`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub kind: Kind,
    pub params: BTreeMap<String, i64>,
    pub blocks: Vec<Value>,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

fn point_list(b: &GridBlock) -> Value {
    b.points().iter().map(|&(x, y)| Value::from(vec![x, y])).collect()
}

impl FamilyFile {
    pub fn from_family(f: &Family, certificate: Option<Certificate>) -> Self {
        let blocks = match &f.payload {
            Payload::Blocks(b) => b.iter().map(|b| Value::from(b.elements().to_vec())).collect(),
            Payload::Rows(r) => r.iter().map(|r| Value::from(r.clone())).collect(),
            Payload::Points(p) => p.iter().map(point_list).collect(),
        };
        FamilyFile { kind: f.kind, params: f.params.clone(), blocks, provenance: f.provenance, certificate }
    }

    pub fn to_family(&self) -> Result<Family> {
        fn each<T: serde::de::DeserializeOwned>(blocks: &[Value]) -> Result<Vec<T>> {
            blocks
                .iter()
                .enumerate()
                .map(|(i, b)| serde_json::from_value(b.clone()).map_err(|e| Error::Parse(format!("block #{i}: {e}"))))
                .collect()
        }
        let payload = match self.kind {
            Kind::Asp | Kind::Pdm => Payload::Rows(each(&self.blocks)?),
            Kind::Gdp | Kind::Goc => Payload::Points(
                each::<Vec<(i64, i64)>>(&self.blocks)?
                    .into_iter()
                    .enumerate()
                    .map(|(i, p)| GridBlock::new(p).map_err(|e| Error::Parse(format!("block #{i}: {e}"))))
                    .collect::<Result<_>>()?,
            ),
            _ => Payload::Blocks(each::<Block>(&self.blocks)?),
        };
        Family::from_parts(self.kind, self.params.clone(), payload, self.provenance)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    /// Sorted keys, one block per line, LF endings, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let compact = |v: &Value| serde_json::to_string(v).expect("JSON values serialize");
        let mut s = String::from("{\n  \"blocks\": [");
        for (i, b) in self.blocks.iter().enumerate() {
            s.push_str(if i == 0 { "\n    " } else { ",\n    " });
            s.push_str(&compact(b));
        }
        s.push_str(if self.blocks.is_empty() { "],\n" } else { "\n  ],\n" });
        if let Some(c) = &self.certificate {
            let v = serde_json::to_value(c).expect("certificates serialize");
            s.push_str(&format!("  \"certificate\": {},\n", compact(&v)));
        }
        s.push_str(&format!("  \"kind\": {},\n", compact(&Value::from(self.kind.name()))));
        s.push_str(&format!("  \"params\": {},\n", compact(&serde_json::to_value(&self.params).unwrap())));
        s.push_str(&format!("  \"provenance\": {}\n}}\n", compact(&serde_json::to_value(self.provenance).unwrap())));
        s
    }
}

/// Kind tag of a windmill labeling document.
pub const WINDMILL_KIND: &str = "K4_WINDMILL";

/// On-disk form of a graceful labeling of `K_4^(m)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingFile {
    pub kind: String,
    pub m: usize,
    pub labels: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// An inclusive integer range written `a..b`, `a..=b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: i64,
    pub hi: i64,
}

impl ParamRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        ParamRange { lo, hi }
    }

    pub fn values(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |x: &str| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad range bound {x:?} in {s:?}")));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(Error::Parse(format!("empty range {s:?}")));
        }
        Ok(ParamRange { lo, hi })
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Parser)]
#[command(name = "diffkit", version, about = "Construct, verify and search difference families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family, verify it and write it with its certificate.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[command(flatten)]
        params: Params,
        /// Print OOC codewords as 0/1 strings instead of a family file.
        #[arg(long)]
        bits: bool,
        #[command(flatten)]
        search: SearchOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a family or labeling file and print the certificate.
    Verify { file: PathBuf },
    /// Construct and verify every instance of a parameter range.
    Sweep {
        #[arg(value_enum)]
        kind: SweepKind,
        #[arg(long)]
        m: Option<ParamRange>,
        #[arg(long)]
        v: Option<ParamRange>,
        #[arg(long)]
        lambda: Option<ParamRange>,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Record wall-clock times (makes the report nondeterministic).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exact-cover search.
    Search {
        #[arg(value_enum)]
        target: SearchTarget,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        search: SearchOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Pdf3,
    Psds43,
    Psds41,
    Pdf4,
    Cdf4,
    Dts,
    Ooc,
    Asp2,
    Asp3,
    Pdm,
    Gdp,
    Goc,
    Graceful,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepKind {
    Psds43,
    Pdf3,
    Pdf41,
    Pdf42,
    Pdf43,
    Pdf46,
    Pdf4lambda,
    Cdf4,
    Dts,
    Graceful,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchTarget {
    Pdf,
    Cdf,
    Asp,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    #[arg(long)]
    pub v: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub lambda: Option<i64>,
    #[arg(long)]
    pub m: Option<i64>,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub u1: Option<i64>,
    #[arg(long)]
    pub u2: Option<i64>,
    #[arg(long)]
    pub n1: Option<i64>,
    #[arg(long)]
    pub n2: Option<i64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SearchOpts {
    /// Wall-clock limit; defaults to DIFFKIT_BUDGET_MS or 60 s.
    #[arg(long)]
    pub budget_ms: Option<u64>,
    #[arg(long)]
    pub max_nodes: Option<u64>,
    /// Explore first-level branches in parallel.
    #[arg(long)]
    pub parallel: bool,
}

impl SearchOpts {
    pub fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::from_env();
        if let Some(ms) = self.budget_ms.filter(|&ms| ms > 0) {
            b.max_time = std::time::Duration::from_millis(ms);
        }
        if let Some(n) = self.max_nodes.filter(|&n| n > 0) {
            b.max_nodes = n;
        }
        if self.parallel {
            b = b.parallel();
        }
        b
    }
}

/// A failed command: exit code plus message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::KnownNonexistent(_) => EXIT_NONEXISTENT,
            _ => EXIT_INADMISSIBLE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_INADMISSIBLE, message: format!("i/o error: {e}") }
    }
}

fn need(x: Option<i64>, name: &str) -> Result<i64, Failure> {
    x.ok_or_else(|| Failure { code: EXIT_INADMISSIBLE, message: format!("missing required --{name}") })
}

/// Unwraps a search result; exhaustion and budget cuts become failures.
fn found(r: SearchReport<Family>, what: &str) -> Result<Family, Failure> {
    match r.outcome {
        SearchOutcome::Found(f) => Ok(f),
        SearchOutcome::Exhausted => {
            Err(Failure { code: EXIT_NONEXISTENT, message: format!("search exhausted: no {what} exists ({} nodes)", r.nodes) })
        }
        SearchOutcome::BudgetExceeded => Err(Failure {
            code: EXIT_INCONCLUSIVE,
            message: format!("inconclusive: search budget exhausted for {what} after {} nodes", r.nodes),
        }),
    }
}

fn pdm(m: i64, n: i64, budget: &SearchBudget) -> Result<Family, Failure> {
    let asp3 = || -> Result<Family, Failure> { found(search::search_asp3(n, budget)?, &format!("ASP(3,{n})")) };
    Ok(match m {
        2 => derive::pdm_from_asp(&derive::asp2(n)?)?,
        3 => derive::pdm_from_asp(&asp3()?)?,
        4 => derive::pdm_with_baseline_row(&derive::pdm_from_asp(&asp3()?)?)?,
        _ => return Err(Error::ConstructionGap(format!("PDM({m},{n}) is only built for m in 2..=4")).into()),
    })
}

fn gdp(u1: i64, u2: i64, budget: &SearchBudget) -> Result<Family, Failure> {
    let (p1, p2) = (cons::pdf_4_1(u1)?, cons::pdf_4_1(u2)?);
    Ok(derive::gdp_from_pdfs_pdm(&p1, &p2, &pdm(4, u2, budget)?)?)
}

enum Built {
    Family(Family),
    Labeling(derive::Labeling),
}

fn construct(kind: ConstructKind, p: &Params, budget: &SearchBudget) -> Result<Built, Failure> {
    use ConstructKind as C;
    let f = match kind {
        C::Pdf3 => cons::pdf_3_1(need(p.v, "v")?)?,
        C::Psds43 => cons::psds_4_3(need(p.m, "m")?)?,
        C::Psds41 => cons::psds_lift_c3_to_c1(&cons::psds_4_3(need(p.m, "m")?)?)?,
        C::Pdf4 => cons::pdf_4_lambda(need(p.v, "v")?, p.lambda.unwrap_or(1))?,
        C::Cdf4 => cons::cdf_4_lambda(need(p.v, "v")?, p.lambda.unwrap_or(1))?,
        C::Dts => {
            let m = need(p.m, "m")?;
            match p.k.unwrap_or(3) {
                3 => derive::dts_from_pdf(&cons::pdf_4_1(12 * m + 1)?)?,
                2 => derive::dts_from_pdf(&cons::pdf_3_1(6 * m + 1)?)?,
                k => return Err(Error::ConstructionGap(format!("DTS rows of {k}+1 marks are not built")).into()),
            }
        }
        C::Ooc => {
            let v = need(p.v, "v")?;
            derive::ooc_from_pdf(&cons::pdf_4_1(v)?, p.n.unwrap_or(v))?
        }
        C::Asp2 => derive::asp2(need(p.n, "n")?)?,
        C::Asp3 => {
            let n = need(p.n, "n")?;
            found(search::search_asp3(n, budget)?, &format!("ASP(3,{n})"))?
        }
        C::Pdm => pdm(p.m.unwrap_or(3), need(p.n, "n")?, budget)?,
        C::Gdp => gdp(need(p.u1, "u1")?, need(p.u2, "u2")?, budget)?,
        C::Goc => {
            let (n1, n2) = (need(p.n1, "n1")?, need(p.n2, "n2")?);
            derive::goc_from_gdp(&gdp(2 * n1 - 1, 2 * n2 - 1, budget)?)?
        }
        C::Graceful => return Ok(Built::Labeling(derive::graceful_from_pdf(&cons::pdf_4_1(12 * need(p.m, "m")? + 1)?)?)),
    };
    Ok(Built::Family(f))
}

fn labeling_doc(l: &derive::Labeling) -> Result<(String, bool)> {
    let cert = verify::verify_graceful_windmill(&l.labels, l.m)?;
    let pass = cert.pass;
    let doc = LabelingFile { kind: WINDMILL_KIND.into(), m: l.m, labels: l.labels.clone(), certificate: Some(cert) };
    Ok((json_line(&doc), pass))
}

fn family_doc(f: &Family) -> Result<(String, bool)> {
    let cert = verify::verify_family(f)?;
    let pass = cert.pass;
    Ok((FamilyFile::from_family(f, Some(cert)).to_canonical_string(), pass))
}

fn json_line<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("report serializes");
    s.push('\n');
    s
}

/// One row of a [`SweepReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepInstance {
    pub params: BTreeMap<String, i64>,
    /// `pass`, `fail` or `skipped` (inadmissible or known nonexistent).
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Aggregate of a sweep, in instance order regardless of thread count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub kind: SweepKind,
    pub ranges: BTreeMap<String, String>,
    pub instances: Vec<SweepInstance>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// True iff no instance failed.
    pub pass: bool,
}

fn sweep_one(kind: SweepKind, params: &BTreeMap<String, i64>) -> Result<Certificate> {
    use SweepKind as S;
    let p = |k: &str| params[k];
    match kind {
        S::Psds43 => verify::verify_family(&cons::psds_4_3(p("m"))?),
        S::Pdf3 => verify::verify_family(&cons::pdf_3_1(p("v"))?),
        S::Pdf41 => verify::verify_family(&cons::pdf_4_1(p("v"))?),
        S::Pdf42 => verify::verify_family(&cons::pdf_4_2(p("v"))?),
        S::Pdf43 => verify::verify_family(&cons::pdf_4_3(p("v"))?),
        S::Pdf46 => verify::verify_family(&cons::pdf_4_6(p("v"))?),
        S::Pdf4lambda => verify::verify_family(&cons::pdf_4_lambda(p("v"), p("lambda"))?),
        S::Cdf4 => verify::verify_family(&cons::cdf_4_lambda(p("v"), p("lambda"))?),
        S::Dts => verify::verify_family(&derive::dts_from_pdf(&cons::pdf_4_1(12 * p("m") + 1)?)?),
        S::Graceful => {
            let l = derive::graceful_from_pdf(&cons::pdf_4_1(12 * p("m") + 1)?)?;
            verify::verify_graceful_windmill(&l.labels, l.m)
        }
    }
}

/// Constructs and verifies every instance in the given ranges.
///
/// `m` drives PSDS, DTS and graceful sweeps; `v` (and `lambda` for the
/// general PDF and CDF sweeps) drive the rest. `jobs == 0` uses the global
/// rayon pool.
pub fn sweep(
    kind: SweepKind,
    m: Option<ParamRange>,
    v: Option<ParamRange>,
    lambda: Option<ParamRange>,
    jobs: usize,
    timing: bool,
) -> Result<SweepReport> {
    use SweepKind as S;
    let missing = |n: &str| Error::Precondition(format!("sweep {kind:?} needs --{n}"));
    let mut ranges = BTreeMap::new();
    let axes: Vec<(&str, ParamRange)> = match kind {
        S::Psds43 | S::Dts | S::Graceful => vec![("m", m.ok_or_else(|| missing("m"))?)],
        S::Pdf4lambda | S::Cdf4 => {
            vec![("v", v.ok_or_else(|| missing("v"))?), ("lambda", lambda.ok_or_else(|| missing("lambda"))?)]
        }
        _ => vec![("v", v.ok_or_else(|| missing("v"))?)],
    };
    let mut points: Vec<BTreeMap<String, i64>> = vec![BTreeMap::new()];
    for (name, r) in &axes {
        ranges.insert(name.to_string(), r.to_string());
        points = points
            .into_iter()
            .flat_map(|p| {
                r.values().map(move |x| {
                    let mut q = p.clone();
                    q.insert(name.to_string(), x);
                    q
                })
            })
            .collect();
    }
    let run = |params: &BTreeMap<String, i64>| {
        let t0 = Instant::now();
        let (status, detail) = match sweep_one(kind, params) {
            Ok(c) if c.pass => ("pass", None),
            Ok(c) => ("fail", Some(format!("{} violations, first {:?}", c.violations(), c.witnesses.first()))),
            Err(e @ (Error::Inadmissible(_) | Error::KnownNonexistent(_))) => ("skipped", Some(e.to_string())),
            Err(e) => ("fail", Some(e.to_string())),
        };
        let elapsed_ms = timing.then(|| t0.elapsed().as_millis() as u64);
        SweepInstance { params: params.clone(), status, detail, elapsed_ms }
    };
    let instances: Vec<SweepInstance> = if jobs == 0 {
        points.par_iter().map(run).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(|| points.par_iter().map(run).collect())
    };
    let count = |s: &str| instances.iter().filter(|i| i.status == s).count();
    let (passed, failed, skipped) = (count("pass"), count("fail"), count("skipped"));
    Ok(SweepReport { kind, ranges, instances, passed, failed, skipped, pass: failed == 0 })
}

/// Summary printed when a search does not produce a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub instance: String,
    pub outcome: &'static str,
    pub verdict: search::Verdict,
    pub nodes: u64,
    pub canonicalization: Vec<&'static str>,
}

fn run_search(target: SearchTarget, p: &Params, budget: &SearchBudget) -> Result<(String, SearchReport<Family>), Failure> {
    let small = |x: i64, name: &str| -> Result<u32, Failure> {
        u32::try_from(x).map_err(|_| Error::Inadmissible(format!("--{name} must be a small nonnegative integer")).into())
    };
    Ok(match target {
        SearchTarget::Pdf | SearchTarget::Cdf => {
            let (v, k, l) = (need(p.v, "v")?, need(p.k, "k")?, p.lambda.unwrap_or(1));
            let (k, l) = (small(k, "k")? as usize, small(l, "lambda")?);
            if target == SearchTarget::Pdf {
                (format!("({v},{k},{l})-PDF"), search::search_small_pdf(v, k, l, budget)?)
            } else {
                (format!("({v},{k},{l})-CDF"), search::search_small_cdf(v, k, l, budget)?)
            }
        }
        SearchTarget::Asp => {
            let (m, n) = (need(p.m, "m")?, need(p.n, "n")?);
            (format!("ASP({m},{n})"), search::search_asp(small(m, "m")? as usize, n, budget)?)
        }
    })
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn verdict_code(pass: bool) -> u8 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_VERIFY_FAIL
    }
}

fn verify_text(text: &str) -> Result<(String, bool), Failure> {
    let raw: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    if raw.get("kind").and_then(Value::as_str) == Some(WINDMILL_KIND) {
        let l: LabelingFile = serde_json::from_value(raw).map_err(|e| Error::Parse(e.to_string()))?;
        let c = verify::verify_graceful_windmill(&l.labels, l.m)?;
        return Ok((json_line(&c), c.pass));
    }
    let f = FamilyFile::parse(text)?.to_family()?;
    let c = verify::verify_family(&f)?;
    Ok((json_line(&c), c.pass))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    match cli.command {
        Command::Construct { kind, params, bits, search, out: path } => {
            let (text, pass) = match construct(kind, &params, &search.budget())? {
                Built::Family(f) if bits => {
                    let pass = verify::verify_family(&f)?.pass;
                    (derive::ooc_bitstrings(&f)?.join("\n") + "\n", pass)
                }
                Built::Family(f) => family_doc(&f)?,
                Built::Labeling(l) => labeling_doc(&l)?,
            };
            emit(out, path.as_ref(), &text)?;
            Ok(verdict_code(pass))
        }
        Command::Verify { file } => {
            let text = std::fs::read_to_string(&file)?;
            let (cert, pass) =
                verify_text(&text).map_err(|f| Failure { message: format!("{}: {}", file.display(), f.message), ..f })?;
            out.write_all(cert.as_bytes())?;
            Ok(verdict_code(pass))
        }
        Command::Sweep { kind, m, v, lambda, jobs, timing, out: path } => {
            let r = sweep(kind, m, v, lambda, jobs, timing)?;
            emit(out, path.as_ref(), &json_line(&r))?;
            Ok(verdict_code(r.pass))
        }
        Command::Search { target, params, search, out: path } => {
            let (instance, r) = run_search(target, &params, &search.budget())?;
            let (verdict, code) = match &r.outcome {
                SearchOutcome::Found(f) => {
                    let (text, pass) = family_doc(f)?;
                    emit(out, path.as_ref(), &text)?;
                    return Ok(verdict_code(pass));
                }
                SearchOutcome::Exhausted => (search::Verdict::Nonexistent, EXIT_NONEXISTENT),
                SearchOutcome::BudgetExceeded => (search::Verdict::Inconclusive, EXIT_INCONCLUSIVE),
            };
            let summary = SearchSummary {
                instance,
                outcome: r.outcome.label(),
                verdict,
                nodes: r.nodes,
                canonicalization: search::CANONICALIZATION.to_vec(),
            };
            emit(out, path.as_ref(), &json_line(&summary))?;
            Ok(code)
        }
    }
}

/// Runs a parsed command; diagnostics go to `err`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
