//! Energy orderings: the chain catalog, chain verification, extremal search
//! and the full ranking of a category.

mod catalog;
mod dsl;
pub mod ledger;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closed_form::energy_config;
use crate::error::{Error, Result};
use crate::graph::{enumerate_class, BicyclicConfig, Sign};
use crate::spectra::validate_tolerance;

pub use catalog::{catalog, expected_chain, find_entry, CatalogEntry};
pub use dsl::Shape;

/// Energies closer than this are treated as tied in rankings and extremal
/// searches.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    EvenEven,
    OddOdd,
    Mixed,
}

impl Category {
    pub const ALL: [Category; 3] = [Category::EvenEven, Category::OddOdd, Category::Mixed];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::EvenEven => "even-even",
            Category::OddOdd => "odd-odd",
            Category::Mixed => "mixed",
        }
    }

    pub fn defined_for(self, n: usize) -> bool {
        n > 5 && (self != Category::Mixed || n % 2 == 1)
    }

    pub fn contains(self, config: &BicyclicConfig) -> bool {
        let odd = config.cycles().iter().filter(|c| c.is_odd()).count();
        match self {
            Category::EvenEven => odd == 0,
            Category::OddOdd => odd == 2,
            Category::Mixed => odd == 1,
        }
    }

    fn check(self, n: usize) -> Result<()> {
        if self.defined_for(n) {
            Ok(())
        } else {
            Err(Error::CategoryMismatch { category: self.as_str().into(), n })
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Category::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown category `{s}` (expected even-even, odd-odd or mixed)"))
    }
}

/// Relation claimed between two energies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Greater,
    Equal,
    /// `>=`, used by the dominance statements.
    AtLeast,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Greater => ">",
            Relation::Equal => "=",
            Relation::AtLeast => ">=",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Relation::Greater => ">",
            Relation::Equal => "=",
            Relation::AtLeast => "\\geq",
        }
    }

    pub fn holds(self, margin: f64, tol: f64) -> bool {
        match self {
            Relation::Greater => margin > tol,
            Relation::Equal => margin.abs() <= tol,
            Relation::AtLeast => margin >= -tol,
        }
    }
}

/// What the numbers say about `lhs - rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Observed {
    Greater,
    Equal,
    Less,
}

impl Observed {
    pub fn of(margin: f64, tol: f64) -> Self {
        if margin.abs() <= tol {
            Observed::Equal
        } else if margin > 0.0 {
            Observed::Greater
        } else {
            Observed::Less
        }
    }
}

/// One claimed comparison `lhs (relation) rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Link {
    pub lhs: BicyclicConfig,
    pub rhs: BicyclicConfig,
    pub relation: Relation,
}

/// A catalog entry materialized at a concrete `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingChain {
    pub chain_id: String,
    pub n: usize,
    pub shape: Shape,
    pub configs: Vec<BicyclicConfig>,
    pub links: Vec<Link>,
    /// Off-lattice ends and empty runs met while expanding the display.
    pub notes: Vec<String>,
}

impl OrderingChain {
    /// Reverses the relation of link `index` by swapping its sides; used for
    /// negative controls.
    pub fn with_swapped_link(&self, index: usize) -> Self {
        let mut out = self.clone();
        let link = &mut out.links[index];
        std::mem::swap(&mut link.lhs, &mut link.rhs);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinkReport {
    pub index: usize,
    pub lhs: BicyclicConfig,
    pub rhs: BicyclicConfig,
    pub lhs_energy: f64,
    pub rhs_energy: f64,
    pub claimed: Relation,
    pub observed: Observed,
    pub margin: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    AllConsistent,
    Deviations,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainReport {
    pub chain_id: String,
    pub n: usize,
    pub links: Vec<LinkReport>,
    pub verdict: Verdict,
}

impl ChainReport {
    pub fn deviations(&self) -> impl Iterator<Item = &LinkReport> {
        self.links.iter().filter(|l| !l.passed)
    }
}

pub fn verify_chain(chain: &OrderingChain, tol: f64) -> Result<ChainReport> {
    validate_tolerance(tol)?;
    let links: Vec<LinkReport> = chain
        .links
        .iter()
        .enumerate()
        .map(|(index, link)| {
            let lhs_energy = energy_config(&link.lhs);
            let rhs_energy = energy_config(&link.rhs);
            let margin = lhs_energy - rhs_energy;
            LinkReport {
                index,
                lhs: link.lhs,
                rhs: link.rhs,
                lhs_energy,
                rhs_energy,
                claimed: link.relation,
                observed: Observed::of(margin, tol),
                margin,
                passed: link.relation.holds(margin, tol),
            }
        })
        .collect();
    let verdict = if links.iter().all(|l| l.passed) { Verdict::AllConsistent } else { Verdict::Deviations };
    Ok(ChainReport { chain_id: chain.chain_id.clone(), n: chain.n, links, verdict })
}

/// Every configuration of the category on `n` vertices, odd signs forced to
/// `+`, in canonical order.
pub fn category_configs(n: usize, cat: Category) -> Result<Vec<BicyclicConfig>> {
    cat.check(n)?;
    let mut out: Vec<BicyclicConfig> = enumerate_class(n)?
        .into_iter()
        .filter(|c| cat.contains(c))
        .map(|c| c.odd_sign_canonical())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedConfig {
    pub rank: usize,
    pub config: BicyclicConfig,
    pub energy: f64,
}

/// All configurations of the category by energy, descending. Configs tied
/// within [`TIE_TOLERANCE`] share a rank and appear in canonical order.
pub fn full_ranking(n: usize, cat: Category) -> Result<Vec<RankedConfig>> {
    let mut scored: Vec<(BicyclicConfig, f64)> =
        category_configs(n, cat)?.into_iter().map(|c| (c, energy_config(&c))).collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    // group ties, then restore canonical order inside each group
    let mut out: Vec<RankedConfig> = Vec::with_capacity(scored.len());
    let mut group_start = 0;
    for i in 0..scored.len() {
        if i > 0 && scored[group_start].1 - scored[i].1 > TIE_TOLERANCE {
            group_start = i;
        }
        out.push(RankedConfig { rank: group_start + 1, config: scored[i].0, energy: scored[i].1 });
    }
    out.sort_by(|a, b| a.rank.cmp(&b.rank).then(a.config.cmp(&b.config)));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub category: Category,
    pub max_configs: Vec<BicyclicConfig>,
    pub max_energy: f64,
    pub min_configs: Vec<BicyclicConfig>,
    pub min_energy: f64,
    pub expected_max: BicyclicConfig,
    pub expected_min: BicyclicConfig,
    pub max_match: bool,
    pub min_match: bool,
}

fn cfg(n: usize, p: usize, sp: Sign, q: usize, sq: Sign) -> BicyclicConfig {
    BicyclicConfig::from_parts(n, p, sp, q, sq).expect("n > 5 leaves room").odd_sign_canonical()
}

/// Predicted extremal configurations; energies are closed-form.
pub fn expected_extremal(n: usize, cat: Category) -> Result<ExtremalResult> {
    cat.check(n)?;
    use Sign::{Negative as N, Positive as P};
    let (max, min) = match cat {
        Category::EvenEven => {
            let max = match n % 4 {
                0 => cfg(n, 2, P, n - 2, P),
                2 => cfg(n, 2, P, n - 2, N),
                1 => cfg(n, 2, P, n - 3, P),
                _ => cfg(n, 2, P, n - 3, N),
            };
            (max, cfg(n, 2, N, 2, N))
        }
        Category::OddOdd => {
            let max = if n % 2 == 0 { cfg(n, 3, P, n - 3, P) } else { cfg(n, 3, P, n - 4, P) };
            (max, cfg(n, 3, P, 3, P))
        }
        Category::Mixed => (cfg(n, 2, P, n - 2, P), cfg(n, 2, N, 3, P)),
    };
    Ok(ExtremalResult {
        n,
        category: cat,
        max_configs: vec![max],
        max_energy: energy_config(&max),
        min_configs: vec![min],
        min_energy: energy_config(&min),
        expected_max: max,
        expected_min: min,
        max_match: true,
        min_match: true,
    })
}

/// Brute-force argmax and argmin over the category, ties included.
pub fn exhaustive_extremal(n: usize, cat: Category) -> Result<ExtremalResult> {
    let expected = expected_extremal(n, cat)?;
    let ranking = full_ranking(n, cat)?;
    let max_energy = ranking[0].energy;
    let min_energy = ranking.iter().map(|r| r.energy).fold(f64::INFINITY, f64::min);
    let max_configs: Vec<_> =
        ranking.iter().filter(|r| max_energy - r.energy <= TIE_TOLERANCE).map(|r| r.config).collect();
    let min_configs: Vec<_> =
        ranking.iter().filter(|r| r.energy - min_energy <= TIE_TOLERANCE).map(|r| r.config).collect();
    Ok(ExtremalResult {
        n,
        category: cat,
        max_match: max_configs.contains(&expected.expected_max),
        min_match: min_configs.contains(&expected.expected_min),
        max_configs,
        max_energy,
        min_configs,
        min_energy,
        expected_max: expected.expected_max,
        expected_min: expected.expected_min,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_examples() {
        let r = expected_extremal(8, Category::EvenEven).unwrap();
        assert_eq!(r.expected_max.label(), "(2,+)(6,+)");
        assert_eq!(r.expected_min.label(), "(2,-)(2,-)");
        let r = expected_extremal(10, Category::OddOdd).unwrap();
        assert_eq!((r.expected_max.label().as_str(), r.expected_min.label().as_str()), ("(3,+)(7,+)", "(3,+)(3,+)"));
        let r = expected_extremal(9, Category::Mixed).unwrap();
        assert_eq!((r.expected_max.label().as_str(), r.expected_min.label().as_str()), ("(2,+)(7,+)", "(2,-)(3,+)"));
        assert!(matches!(expected_extremal(8, Category::Mixed), Err(Error::CategoryMismatch { .. })));
        assert!(expected_extremal(5, Category::EvenEven).is_err());
    }

    #[test]
    fn exhaustive_examples() {
        let r = exhaustive_extremal(8, Category::EvenEven).unwrap();
        assert!((r.max_energy - 6.0).abs() < 1e-12 && r.max_match && r.min_match);
        assert_eq!(r.min_energy, 0.0);
        let r = exhaustive_extremal(7, Category::EvenEven).unwrap();
        assert!((r.max_energy - (2.0 + 2.0 * 2f64.sqrt())).abs() < 1e-12);
        assert!(r.max_configs.iter().any(|c| c.label() == "(2,+)(4,-)"));
        let r = exhaustive_extremal(12, Category::OddOdd).unwrap();
        assert!((r.min_energy - 4.0).abs() < 1e-12);
        assert_eq!(r.min_configs.len(), 1);
    }

    #[test]
    fn extremal_theorems_small_range() {
        for n in 6..=30 {
            for cat in Category::ALL {
                if !cat.defined_for(n) {
                    continue;
                }
                let r = exhaustive_extremal(n, cat).unwrap();
                assert!(r.max_match && r.min_match, "n = {n} {cat}: {r:?}");
            }
        }
    }

    #[test]
    fn ranking_examples() {
        let r = full_ranking(6, Category::EvenEven).unwrap();
        assert_eq!(r[0].config, expected_extremal(6, Category::EvenEven).unwrap().expected_max);
        let r = full_ranking(7, Category::Mixed).unwrap();
        let last = r.last().unwrap();
        assert_eq!(last.config.label(), "(2,-)(3,+)");
        assert!((last.energy - 2.0).abs() < 1e-12);
        let r = full_ranking(6, Category::OddOdd).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0].energy - 4.0).abs() < 1e-12);
    }

    #[test]
    fn ranking_ties_share_rank() {
        // (2,+)(4,+) and (2,+)(2,+) both have energy 4
        let r = full_ranking(6, Category::EvenEven).unwrap();
        let tied: Vec<_> = r.iter().filter(|x| (x.energy - 4.0).abs() < 1e-12).collect();
        assert!(tied.len() >= 2);
        assert!(tied.iter().all(|x| x.rank == tied[0].rank));
        assert!(tied.windows(2).all(|w| w[0].config < w[1].config));
    }

    #[test]
    fn verify_reports_margins() {
        let chain = expected_chain("ee-nn-n0-mod8-0", 16).unwrap();
        let report = verify_chain(&chain, 1e-9).unwrap();
        assert_eq!(report.verdict, Verdict::AllConsistent);
        assert_eq!(report.links.len(), chain.links.len());
        let control = verify_chain(&chain.with_swapped_link(0), 1e-9).unwrap();
        assert_eq!(control.deviations().count(), 1);
        assert_eq!(control.deviations().next().unwrap().observed, Observed::Less);
        assert!(verify_chain(&chain, 0.0).is_err());
    }

    #[test]
    fn relation_semantics() {
        assert!(Relation::Greater.holds(1e-8, 1e-9));
        assert!(!Relation::Greater.holds(1e-10, 1e-9));
        assert!(Relation::Equal.holds(-1e-10, 1e-9));
        assert!(Relation::AtLeast.holds(-1e-10, 1e-9));
        assert!(!Relation::AtLeast.holds(-1e-8, 1e-9));
    }

    #[test]
    fn category_parse() {
        assert_eq!("odd-odd".parse::<Category>(), Ok(Category::OddOdd));
        assert!("odd".parse::<Category>().is_err());
    }
}
