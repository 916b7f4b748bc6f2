//! The audited-deviation ledger: every chain link that fails numerically,
//! with its cause, shipped as data and matched against fresh verifier output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{catalog, expected_chain, verify_chain, ChainReport, Observed, Relation};
use crate::error::Result;

/// Margins in the ledger must match the verifier to this precision.
pub const MARGIN_MATCH: f64 = 1e-9;

pub const LEDGER_JSON: &str = include_str!("../../data/audited_deviations.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cause {
    /// A displayed relation symbol does not match an exact identity (an
    /// equality printed as `>`, for instance).
    RelationSymbol,
    /// The displayed end of a run lies off its step lattice and the appended
    /// end term does not obey the claimed relation.
    OffLatticeTerminal,
    /// The claim itself is false; no reading of the display repairs it.
    ClaimRefuted,
    /// A proof estimate uses a constant rounded past its exact value.
    RoundedConstant,
    /// Not yet classified by hand.
    Unclassified,
}

impl Cause {
    pub fn is_typo(self) -> bool {
        matches!(self, Cause::RelationSymbol | Cause::OffLatticeTerminal)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deviation {
    pub n: usize,
    pub link: usize,
    pub lhs: String,
    pub rhs: String,
    pub claimed: Relation,
    pub observed: Observed,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeviationGroup {
    pub chain_id: String,
    pub cause: Cause,
    pub note: String,
    pub deviations: Vec<Deviation>,
}

/// A failed analysis check at one `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisFailure {
    pub n: usize,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisGroup {
    pub check_id: String,
    pub cause: Cause,
    pub note: String,
    pub failures: Vec<AnalysisFailure>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ledger {
    pub n_range: [usize; 2],
    pub tolerance: f64,
    pub groups: Vec<DeviationGroup>,
    #[serde(default)]
    pub analysis: Vec<AnalysisGroup>,
}

impl Ledger {
    pub fn shipped() -> Self {
        serde_json::from_str(LEDGER_JSON).expect("shipped ledger parses")
    }

    /// True when the ledger records `check_id` failing at `n` with this slack.
    pub fn explains_analysis(&self, check_id: &str, n: usize, slack: f64) -> bool {
        self.analysis.iter().any(|g| {
            g.check_id == check_id
                && g.failures.iter().any(|f| f.n == n && (f.slack - slack).abs() <= MARGIN_MATCH)
        })
    }

    pub fn lookup(&self, chain_id: &str, d: &Deviation) -> Option<&DeviationGroup> {
        self.groups.iter().find(|g| {
            g.chain_id == chain_id && g.deviations.iter().any(|e| same_deviation(e, d))
        })
    }
}

fn same_deviation(a: &Deviation, b: &Deviation) -> bool {
    a.n == b.n
        && a.link == b.link
        && a.lhs == b.lhs
        && a.rhs == b.rhs
        && a.claimed == b.claimed
        && a.observed == b.observed
        && (a.margin - b.margin).abs() <= MARGIN_MATCH
}

pub fn deviations_of(report: &ChainReport) -> Vec<Deviation> {
    report
        .deviations()
        .map(|l| Deviation {
            n: report.n,
            link: l.index,
            lhs: l.lhs.label(),
            rhs: l.rhs.label(),
            claimed: l.claimed,
            observed: l.observed,
            margin: l.margin,
        })
        .collect()
}

/// Verifies every catalog entry at every admissible `n` in the range.
pub fn verify_catalog(lo: usize, hi: usize, tol: f64) -> Result<Vec<ChainReport>> {
    let mut out = Vec::new();
    for entry in catalog() {
        for n in lo..=hi {
            if let Ok(chain) = expected_chain(entry.id, n) {
                out.push(verify_chain(&chain, tol)?);
            }
        }
    }
    Ok(out)
}

/// Builds an unclassified ledger from verifier output; causes are assigned by
/// hand afterwards.
pub fn ledger_from_reports(reports: &[ChainReport], n_range: [usize; 2], tolerance: f64) -> Ledger {
    let mut by_chain: BTreeMap<String, Vec<Deviation>> = BTreeMap::new();
    for r in reports {
        let d = deviations_of(r);
        if !d.is_empty() {
            by_chain.entry(r.chain_id.clone()).or_default().extend(d);
        }
    }
    Ledger {
        n_range,
        tolerance,
        groups: by_chain
            .into_iter()
            .map(|(chain_id, deviations)| DeviationGroup {
                chain_id,
                cause: Cause::Unclassified,
                note: String::new(),
                deviations,
            })
            .collect(),
        analysis: Vec::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnexplainedDeviation {
    pub chain_id: String,
    pub deviation: Deviation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Audit {
    pub explained: usize,
    pub unexplained: Vec<UnexplainedDeviation>,
    /// Ledger entries that the verifier no longer reproduces.
    pub stale: Vec<UnexplainedDeviation>,
    /// Chains whose ledger group says the claim itself is false.
    pub refuted_chains: Vec<String>,
}

impl Audit {
    pub fn clean(&self) -> bool {
        self.unexplained.is_empty() && self.stale.is_empty()
    }
}

/// Matches verifier output against a ledger. Stale entries are only reported
/// for chains present in `reports` and `n` inside the audited range.
pub fn audit(reports: &[ChainReport], ledger: &Ledger, lo: usize, hi: usize) -> Audit {
    let mut explained = 0;
    let mut unexplained = Vec::new();
    let mut seen: Vec<(String, Deviation)> = Vec::new();
    for r in reports {
        for d in deviations_of(r) {
            if ledger.lookup(&r.chain_id, &d).is_some() {
                explained += 1;
            } else {
                unexplained.push(UnexplainedDeviation { chain_id: r.chain_id.clone(), deviation: d.clone() });
            }
            seen.push((r.chain_id.clone(), d));
        }
    }
    let mut stale = Vec::new();
    for g in ledger.groups.iter().filter(|g| reports.iter().any(|r| r.chain_id == g.chain_id)) {
        for e in g.deviations.iter().filter(|e| (lo..=hi).contains(&e.n)) {
            if !seen.iter().any(|(id, d)| *id == g.chain_id && same_deviation(d, e)) {
                stale.push(UnexplainedDeviation { chain_id: g.chain_id.clone(), deviation: e.clone() });
            }
        }
    }
    let mut refuted_chains: Vec<String> = ledger
        .groups
        .iter()
        .filter(|g| g.cause == Cause::ClaimRefuted)
        .filter(|g| reports.iter().any(|r| r.chain_id == g.chain_id))
        .filter(|g| g.deviations.iter().any(|e| (lo..=hi).contains(&e.n)))
        .map(|g| g.chain_id.clone())
        .collect();
    refuted_chains.dedup();
    Audit { explained, unexplained, stale, refuted_chains }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_ledger_parses_and_is_classified() {
        let l = Ledger::shipped();
        assert!(l.groups.iter().all(|g| g.cause != Cause::Unclassified && !g.note.is_empty()));
    }

    #[test]
    fn fresh_ledger_audits_clean() {
        let reports = verify_catalog(6, 20, 1e-9).unwrap();
        let ledger = ledger_from_reports(&reports, [6, 20], 1e-9);
        let a = audit(&reports, &ledger, 6, 20);
        assert!(a.clean());
        let empty = Ledger { n_range: [6, 20], tolerance: 1e-9, groups: vec![], analysis: vec![] };
        let a = audit(&reports, &empty, 6, 20);
        assert_eq!(a.unexplained.len(), ledger.groups.iter().map(|g| g.deviations.len()).sum::<usize>());
    }

    #[test]
    fn stale_entries_detected() {
        let reports = verify_catalog(6, 12, 1e-9).unwrap();
        let mut ledger = ledger_from_reports(&reports, [6, 12], 1e-9);
        ledger.groups.push(DeviationGroup {
            chain_id: "oo-n0".into(),
            cause: Cause::RelationSymbol,
            note: "planted".into(),
            deviations: vec![Deviation {
                n: 8,
                link: 0,
                lhs: "x".into(),
                rhs: "y".into(),
                claimed: Relation::Greater,
                observed: Observed::Less,
                margin: -1.0,
            }],
        });
        assert_eq!(audit(&reports, &ledger, 6, 12).stale.len(), 1);
    }
}
