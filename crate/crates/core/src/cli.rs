//! The `sidigraph` command line: `table`, `verify`, `extremal`, `chain`.
//!
//! Exit status is 0 on success, 1 when `verify` finds an unexplained
//! deviation, and 2 on any execution failure.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::analysis::proof_bounds_hold;
use crate::error::{Error, Result};
use crate::ordering::ledger::{ledger_from_reports, AnalysisFailure, AnalysisGroup, Cause, Ledger};
use crate::ordering::{catalog, exhaustive_extremal, expected_chain, verify_chain, Category};
use crate::report::{
    render_chain, render_extremal, render_table, verify, Format, NRange, RunConfig, DEFAULT_TOLERANCE,
};
use crate::spectra::validate_tolerance;

#[derive(Debug, Parser)]
#[command(name = "sidigraph", version, about = "Energy orderings of vertex-disjoint bicyclic signed digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full energy ranking of one category at one n.
    Table(Common),
    /// Oracle equivalence, chain verification, extremal matching and analysis
    /// checks over a range of n, written as a JSON report.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Also write an unclassified deviation ledger built from this run.
        #[arg(long, value_name = "PATH")]
        emit_ledger: Option<PathBuf>,
    },
    /// Expected against exhaustive extremal configurations.
    Extremal(Common),
    /// Materialize and verify one catalogued chain; lists the catalog when no
    /// chain id is given.
    Chain(Common),
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long)]
    n: Option<usize>,
    /// Inclusive range such as `6..40`.
    #[arg(long, value_name = "A..B")]
    n_range: Option<NRange>,
    #[arg(long)]
    category: Option<Category>,
    #[arg(long)]
    chain_id: Option<String>,
    #[arg(long, env = "SIDIGRAPH_TOL", default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[arg(long)]
    format: Option<Format>,
    /// Output file; defaults to a generated name under SIDIGRAPH_OUT, or
    /// standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long = "out-dir", env = "SIDIGRAPH_OUT", hide = true)]
    out_dir: Option<PathBuf>,
}

impl Common {
    fn range(&self) -> Result<NRange> {
        match (self.n, self.n_range) {
            (Some(n), None) => Ok(NRange::single(n)),
            (None, Some(r)) => NRange::new(r.lo, r.hi),
            (Some(_), Some(_)) => Err(Error::Precondition("give --n or --n-range, not both".into())),
            (None, None) => Err(Error::Precondition("--n or --n-range is required".into())),
        }
    }

    fn single_n(&self) -> Result<usize> {
        let r = self.range()?;
        if r.lo != r.hi {
            return Err(Error::Precondition("this command takes a single n".into()));
        }
        Ok(r.lo)
    }

    fn tolerance(&self) -> Result<f64> {
        validate_tolerance(self.tolerance)?;
        Ok(self.tolerance)
    }

    fn emit(&self, content: &str, default_name: &str) -> Result<()> {
        let path = match (&self.out, &self.out_dir) {
            (Some(p), _) => Some(p.clone()),
            (None, Some(dir)) => Some(dir.join(default_name)),
            (None, None) => None,
        };
        match path {
            Some(p) => write_file(&p, content),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content).map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))
}

fn table(c: &Common) -> Result<i32> {
    let n = c.single_n()?;
    let cat = c.category.ok_or_else(|| Error::Precondition("--category is required".into()))?;
    c.tolerance()?;
    let format = c.format.unwrap_or(Format::Csv);
    let out = render_table(n, cat, format)?;
    c.emit(&out, &format!("table-n{n}-{cat}.{}", format.extension()))?;
    Ok(0)
}

fn emitted_ledger(report: &crate::report::VerifyReport, rc: &RunConfig) -> Result<Ledger> {
    let mut ledger = ledger_from_reports(&report.chain_reports(), [rc.range.lo, rc.range.hi], rc.tolerance);
    let mut groups: Vec<AnalysisGroup> = Vec::new();
    for n in rc.range.iter().filter(|n| n % 4 == 0 && *n >= 8) {
        for check in proof_bounds_hold(n)?.checks.into_iter().filter(|c| !c.holds) {
            let failure = AnalysisFailure { n, slack: check.slack };
            match groups.iter_mut().find(|g| g.check_id == check.claim_id) {
                Some(g) => g.failures.push(failure),
                None => groups.push(AnalysisGroup {
                    check_id: check.claim_id.to_string(),
                    cause: Cause::Unclassified,
                    note: String::new(),
                    failures: vec![failure],
                }),
            }
        }
    }
    ledger.analysis = groups;
    Ok(ledger)
}

fn run_verify(c: &Common, emit_ledger: Option<&Path>) -> Result<i32> {
    if c.format.is_some_and(|f| f != Format::Json) {
        return Err(Error::Precondition("verify writes JSON only".into()));
    }
    let mut rc = RunConfig::new(c.range()?, c.tolerance()?)?;
    rc.category = c.category;
    rc.chain_id = c.chain_id.clone();
    let report = verify(&rc, &Ledger::shipped())?;
    c.emit(&report.to_json(), &format!("verify-{}-{}.json", rc.range.lo, rc.range.hi))?;
    if let Some(path) = emit_ledger {
        let ledger = emitted_ledger(&report, &rc)?;
        let mut s = serde_json::to_string_pretty(&ledger).expect("ledger serializes");
        s.push('\n');
        write_file(path, &s)?;
    }
    let s = &report.summary;
    eprintln!(
        "{} chain runs; {} explained and {} unexplained deviations; {} stale ledger entries; {} refuted chains",
        s.chains_checked,
        s.explained_deviations,
        s.unexplained_deviations,
        s.stale_ledger_entries,
        s.refuted_chains.len()
    );
    Ok(s.exit_code())
}

fn extremal(c: &Common) -> Result<i32> {
    let n = c.single_n()?;
    c.tolerance()?;
    if n <= 5 {
        return Err(Error::Precondition(format!("extremal needs n > 5, got {n}")));
    }
    let cats: Vec<Category> = match c.category {
        Some(cat) => vec![cat],
        None => Category::ALL.into_iter().filter(|cat| cat.defined_for(n)).collect(),
    };
    let mut out = String::new();
    for cat in cats {
        out.push_str(&render_extremal(&exhaustive_extremal(n, cat)?, c.format));
    }
    let ext = c.format.map_or("txt", Format::extension);
    c.emit(&out, &format!("extremal-n{n}.{ext}"))?;
    Ok(0)
}

fn chain(c: &Common) -> Result<i32> {
    let Some(id) = &c.chain_id else {
        let mut out = String::new();
        for e in catalog().iter().filter(|e| c.category.is_none_or(|cat| cat == e.category)) {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", e.id, e.category, e.hypotheses_text(), e.summary));
        }
        c.emit(&out, "catalog.txt")?;
        return Ok(0);
    };
    let n = c.single_n()?;
    let chain = expected_chain(id, n)?;
    let report = verify_chain(&chain, c.tolerance()?)?;
    let format = c.format.unwrap_or(Format::Csv);
    c.emit(&render_chain(&chain, &report, format), &format!("chain-{id}-n{n}.{}", format.extension()))?;
    Ok(0)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Table(c) => table(c),
        Command::Verify { common, emit_ledger } => run_verify(common, emit_ledger.as_deref()),
        Command::Extremal(c) => extremal(c),
        Command::Chain(c) => chain(c),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
