//! Report assembly and rendering shared by the command-line front end and
//! the examples: the verification report, ranking tables, materialized
//! chains and extremal summaries, as CSV, JSON or LaTeX.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::{check_monotone, proof_bounds_hold, registry};
use crate::closed_form::{branch, energy_config};
use crate::error::{Error, Result};
use crate::graph::{build_adjacency, enumerate_class, BicyclicConfig, CycleSpec, Sign};
use crate::ordering::ledger::{audit, Audit, Ledger};
use crate::ordering::{
    catalog, exhaustive_extremal, expected_chain, find_entry, full_ranking, verify_chain, Category, ChainReport,
    ExtremalResult, OrderingChain, RankedConfig,
};
use crate::spectra::{energy_of_sidigraph, validate_tolerance};

pub const REPORT_VERSION: &str = "1.0.0";
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Samples per monotone claim in the verification report.
pub const MONOTONE_SAMPLES: usize = 1000;
pub const REPORT_SCHEMA: &str = include_str!("../data/report.schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Latex => "tex",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            _ => Err(format!("unknown format `{s}` (expected csv, json or latex)")),
        }
    }
}

/// Inclusive range of vertex counts, parsed from `a..b` or a single `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(Error::Precondition(format!("empty range {lo}..{hi}")));
        }
        Ok(Self { lo, hi })
    }

    pub fn single(n: usize) -> Self {
        Self { lo: n, hi: n }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad range `{s}`"));
        match s.split_once("..") {
            Some((a, b)) => Ok(Self { lo: parse(a)?, hi: parse(b.trim_start_matches('='))? }),
            None => parse(s).map(Self::single),
        }
    }
}

/// Settings of one verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub range: NRange,
    pub category: Option<Category>,
    pub chain_id: Option<String>,
    pub tolerance: f64,
}

impl RunConfig {
    pub fn new(range: NRange, tolerance: f64) -> Result<Self> {
        validate_tolerance(tolerance)?;
        NRange::new(range.lo, range.hi)?;
        Ok(Self { range, category: None, chain_id: None, tolerance })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Meta {
    pub version: &'static str,
    pub tolerance: f64,
    pub n_range: [usize; 2],
}

/// Closed form against the spectral oracle for every config at one `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceEntry {
    pub n: usize,
    pub configs: usize,
    pub max_abs_diff: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditStatus {
    Consistent,
    Explained,
    Unexplained,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainEntry {
    #[serde(flatten)]
    pub report: ChainReport,
    pub notes: Vec<String>,
    pub audit: AuditStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisEntry {
    pub check: &'static str,
    pub id: String,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
    pub audit: AuditStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub chains_checked: usize,
    pub explained_deviations: usize,
    pub unexplained_deviations: usize,
    pub stale_ledger_entries: usize,
    pub refuted_chains: Vec<String>,
    pub equivalence_failures: usize,
    pub extremal_mismatches: usize,
    pub analysis_failures_explained: usize,
    pub analysis_failures_unexplained: usize,
}

impl Summary {
    /// `verify` exit status: nonzero iff something is unexplained.
    pub fn exit_code(&self) -> i32 {
        let unexplained = self.unexplained_deviations
            + self.stale_ledger_entries
            + self.equivalence_failures
            + self.extremal_mismatches
            + self.analysis_failures_unexplained;
        i32::from(unexplained > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub meta: Meta,
    pub equivalence: Vec<EquivalenceEntry>,
    pub chains: Vec<ChainEntry>,
    pub extremal: Vec<ExtremalResult>,
    pub analysis: Vec<AnalysisEntry>,
    pub audit: Audit,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn chain_reports(&self) -> Vec<ChainReport> {
        self.chains.iter().map(|c| c.report.clone()).collect()
    }
}

fn equivalence_at(n: usize, tol: f64) -> Result<EquivalenceEntry> {
    let configs = enumerate_class(n)?;
    let mut max_abs_diff: f64 = 0.0;
    for c in &configs {
        let oracle = energy_of_sidigraph(&build_adjacency(c), tol)?;
        max_abs_diff = max_abs_diff.max((energy_config(c) - oracle).abs());
    }
    Ok(EquivalenceEntry { n, configs: configs.len(), max_abs_diff, passed: max_abs_diff <= tol })
}

fn chain_ids(rc: &RunConfig) -> Result<Vec<&'static str>> {
    if let Some(id) = &rc.chain_id {
        return Ok(vec![find_entry(id)?.id]);
    }
    Ok(catalog()
        .iter()
        .filter(|e| rc.category.is_none_or(|c| c == e.category))
        .map(|e| e.id)
        .collect())
}

fn analysis_at(n: usize, ledger: &Ledger, out: &mut Vec<AnalysisEntry>) -> Result<()> {
    if n % 4 != 0 || n < 8 {
        return Ok(());
    }
    for claim in registry(n)? {
        let r = check_monotone(&claim, MONOTONE_SAMPLES)?;
        out.push(AnalysisEntry {
            check: "monotone",
            id: r.claim_id.clone(),
            n,
            passed: r.passed(),
            detail: format!("{} violations in {} samples", r.violation_count, r.samples),
            audit: if r.passed() { AuditStatus::Consistent } else { AuditStatus::Unexplained },
        });
    }
    for c in proof_bounds_hold(n)?.checks {
        let audit = if c.holds {
            AuditStatus::Consistent
        } else if ledger.explains_analysis(c.claim_id, n, c.slack) {
            AuditStatus::Explained
        } else {
            AuditStatus::Unexplained
        };
        out.push(AnalysisEntry {
            check: "proof-bound",
            id: c.claim_id.to_string(),
            n,
            passed: c.holds,
            detail: format!("{} energy {:.12} bound {:.12} slack {:e}", c.config, c.energy, c.bound, c.slack),
            audit,
        });
    }
    Ok(())
}

/// Runs every check selected by `rc` and audits the result against `ledger`.
pub fn verify(rc: &RunConfig, ledger: &Ledger) -> Result<VerifyReport> {
    validate_tolerance(rc.tolerance)?;
    let NRange { lo, hi } = NRange::new(rc.range.lo, rc.range.hi)?;
    let tol = rc.tolerance;

    let equivalence = rc
        .range
        .iter()
        .filter(|&n| n >= 4)
        .map(|n| equivalence_at(n, tol))
        .collect::<Result<Vec<_>>>()?;

    let mut chain_runs: Vec<(OrderingChain, ChainReport)> = Vec::new();
    for id in chain_ids(rc)? {
        for n in rc.range.iter() {
            if let Ok(chain) = expected_chain(id, n) {
                let report = verify_chain(&chain, tol)?;
                chain_runs.push((chain, report));
            }
        }
    }
    let reports: Vec<ChainReport> = chain_runs.iter().map(|(_, r)| r.clone()).collect();
    let audit = audit(&reports, ledger, lo, hi);
    let chains: Vec<ChainEntry> = chain_runs
        .into_iter()
        .map(|(chain, report)| {
            let status = if report.deviations().next().is_none() {
                AuditStatus::Consistent
            } else if audit.unexplained.iter().any(|u| u.chain_id == report.chain_id && u.deviation.n == report.n) {
                AuditStatus::Unexplained
            } else {
                AuditStatus::Explained
            };
            ChainEntry { report, notes: chain.notes, audit: status }
        })
        .collect();

    let mut extremal = Vec::new();
    for n in rc.range.iter() {
        for cat in Category::ALL {
            if cat.defined_for(n) && rc.category.is_none_or(|c| c == cat) {
                extremal.push(exhaustive_extremal(n, cat)?);
            }
        }
    }

    let mut analysis = Vec::new();
    for n in rc.range.iter() {
        analysis_at(n, ledger, &mut analysis)?;
    }

    let summary = Summary {
        chains_checked: chains.len(),
        explained_deviations: audit.explained,
        unexplained_deviations: audit.unexplained.len(),
        stale_ledger_entries: audit.stale.len(),
        refuted_chains: audit.refuted_chains.clone(),
        equivalence_failures: equivalence.iter().filter(|e| !e.passed).count(),
        extremal_mismatches: extremal.iter().filter(|e| !(e.max_match && e.min_match)).count(),
        analysis_failures_explained: analysis.iter().filter(|a| a.audit == AuditStatus::Explained).count(),
        analysis_failures_unexplained: analysis.iter().filter(|a| a.audit == AuditStatus::Unexplained).count(),
    };
    Ok(VerifyReport {
        meta: Meta { version: REPORT_VERSION, tolerance: tol, n_range: [lo, hi] },
        equivalence,
        chains,
        extremal,
        analysis,
        audit,
        summary,
    })
}

fn sign_char(s: Sign) -> char {
    s.symbol()
}

fn energy_text(e: f64) -> String {
    format!("{e:.12}")
}

fn latex_cycle(c: CycleSpec) -> String {
    match c.sign() {
        Sign::Positive => c.order().to_string(),
        Sign::Negative => format!("\\boldsymbol{{{}}}", c.order()),
    }
}

fn latex_config(c: &BicyclicConfig) -> String {
    format!("E(D_{{{}}}^s[{},{}])", c.n(), latex_cycle(c.first()), latex_cycle(c.second()))
}

#[derive(Serialize)]
struct TableRow {
    rank: usize,
    p: usize,
    sign_p: char,
    q: usize,
    sign_q: char,
    energy: f64,
    branch_p: &'static str,
    branch_q: &'static str,
}

fn table_rows(rows: &[RankedConfig]) -> Vec<TableRow> {
    rows.iter()
        .map(|r| {
            let [a, b] = r.config.cycles();
            TableRow {
                rank: r.rank,
                p: a.order(),
                sign_p: sign_char(a.sign()),
                q: b.order(),
                sign_q: sign_char(b.sign()),
                energy: r.energy,
                branch_p: branch(a).label(),
                branch_q: branch(b).label(),
            }
        })
        .collect()
}

/// The full ranking of a category at `n`.
pub fn render_table(n: usize, cat: Category, format: Format) -> Result<String> {
    if n <= 5 {
        return Err(Error::Precondition(format!("tables need n > 5, got {n}")));
    }
    let rows = table_rows(&full_ranking(n, cat)?);
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("rank,p,sign_p,q,sign_q,energy,branch_p,branch_q\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.rank, r.p, r.sign_p, r.q, r.sign_q, energy_text(r.energy), r.branch_p, r.branch_q
                );
            }
        }
        Format::Json => {
            let v = serde_json::json!({ "n": n, "category": cat, "rows": rows });
            out = serde_json::to_string_pretty(&v).expect("table serializes");
            out.push('\n');
        }
        Format::Latex => {
            out.push_str("\\begin{tabular}{rrrrrl}\n\\hline\nrank & $p$ & $q$ & $E$ & \\multicolumn{2}{l}{branches} \\\\\n\\hline\n");
            for r in &rows {
                let p = if r.sign_p == '-' { format!("\\boldsymbol{{{}}}", r.p) } else { r.p.to_string() };
                let q = if r.sign_q == '-' { format!("\\boldsymbol{{{}}}", r.q) } else { r.q.to_string() };
                let _ = writeln!(
                    out,
                    "{} & ${p}$ & ${q}$ & {} & {} & {} \\\\",
                    r.rank, energy_text(r.energy), r.branch_p, r.branch_q
                );
            }
            out.push_str("\\hline\n\\end{tabular}\n");
        }
    }
    Ok(out)
}

/// A materialized chain with its verification.
pub fn render_chain(chain: &OrderingChain, report: &ChainReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("link,lhs,rhs,lhs_energy,rhs_energy,claimed,observed,margin,passed\n");
            for l in &report.links {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{:e},{}",
                    l.index,
                    l.lhs.label(),
                    l.rhs.label(),
                    energy_text(l.lhs_energy),
                    energy_text(l.rhs_energy),
                    l.claimed.symbol(),
                    serde_json::to_value(l.observed).unwrap().as_str().unwrap(),
                    l.margin,
                    l.passed
                );
            }
        }
        Format::Json => {
            let v = serde_json::json!({ "chain": chain, "report": report });
            out = serde_json::to_string_pretty(&v).expect("chain serializes");
            out.push('\n');
        }
        Format::Latex => {
            let _ = writeln!(out, "% {} at n = {}", chain.chain_id, chain.n);
            out.push_str("\\begin{eqnarray*}\n");
            match chain.shape {
                crate::ordering::Shape::Sequence => {
                    let _ = write!(out, "&&{}", latex_config(&chain.configs[0]));
                    for (i, l) in chain.links.iter().enumerate() {
                        let sep = if i % 3 == 2 { "\\\\\n&" } else { "" };
                        let _ = write!(out, "{sep} {} {}", l.relation.latex(), latex_config(&l.rhs));
                    }
                    out.push_str(".\n");
                }
                crate::ordering::Shape::Dominance => {
                    for (i, l) in chain.links.iter().enumerate() {
                        let end = if i + 1 < chain.links.len() { "\\\\" } else { "." };
                        let _ = writeln!(out, "&&{} {} {}{end}", latex_config(&l.lhs), l.relation.latex(), latex_config(&l.rhs));
                    }
                }
            }
            out.push_str("\\end{eqnarray*}\n");
        }
    }
    out
}

/// Expected against exhaustive extremal configurations.
pub fn render_extremal(r: &ExtremalResult, format: Option<Format>) -> String {
    let labels = |v: &[BicyclicConfig]| v.iter().map(|c| c.label()).collect::<Vec<_>>().join(" ");
    let flag = |m: bool| if m { "MATCH" } else { "MISMATCH" };
    match format {
        None => format!(
            "n = {} category = {}\nmax expected {} E={} found {} E={} {}\nmin expected {} E={} found {} E={} {}\n",
            r.n,
            r.category,
            r.expected_max.label(),
            energy_text(energy_config(&r.expected_max)),
            labels(&r.max_configs),
            energy_text(r.max_energy),
            flag(r.max_match),
            r.expected_min.label(),
            energy_text(energy_config(&r.expected_min)),
            labels(&r.min_configs),
            energy_text(r.min_energy),
            flag(r.min_match),
        ),
        Some(Format::Csv) => {
            let mut out = String::from("n,category,kind,expected,expected_energy,found,found_energy,match\n");
            for (kind, exp, found, e, m) in [
                ("max", r.expected_max, &r.max_configs, r.max_energy, r.max_match),
                ("min", r.expected_min, &r.min_configs, r.min_energy, r.min_match),
            ] {
                let _ = writeln!(
                    out,
                    "{},{},{kind},{},{},{},{},{m}",
                    r.n,
                    r.category,
                    exp.label(),
                    energy_text(energy_config(&exp)),
                    labels(found),
                    energy_text(e)
                );
            }
            out
        }
        Some(Format::Json) => {
            let mut s = serde_json::to_string_pretty(r).expect("extremal serializes");
            s.push('\n');
            s
        }
        Some(Format::Latex) => format!(
            "\\begin{{eqnarray*}}\n\\max &=& {} = {}\\quad\\text{{({})}}\\\\\n\\min &=& {} = {}\\quad\\text{{({})}}.\n\\end{{eqnarray*}}\n",
            latex_config(&r.expected_max),
            energy_text(r.max_energy),
            flag(r.max_match),
            latex_config(&r.expected_min),
            energy_text(r.min_energy),
            flag(r.min_match),
        ),
    }
}
