use sidigraph::closed_form::energy_config;
use sidigraph::ordering::ledger::{audit, verify_catalog, Cause, Ledger};
use sidigraph::ordering::{
    catalog, exhaustive_extremal, expected_chain, full_ranking, verify_chain, Category, Relation, Verdict,
};
use sidigraph::spectra::energy_of_sidigraph;
use sidigraph::{build_adjacency, enumerate_class};

#[test]
fn closed_form_matches_oracle_through_n40() {
    for n in 4..=40 {
        for c in enumerate_class(n).unwrap() {
            let oracle = energy_of_sidigraph(&build_adjacency(&c), 1e-12).unwrap();
            assert!((energy_config(&c) - oracle).abs() <= 1e-9, "{} at n = {n}", c.label());
        }
    }
}

#[test]
fn extremal_configs_match_through_n100() {
    for n in 6..=100 {
        for cat in Category::ALL.into_iter().filter(|c| c.defined_for(n)) {
            let r = exhaustive_extremal(n, cat).unwrap();
            assert!(r.max_match && r.min_match, "n = {n}, {cat}: {r:?}");
        }
    }
}

#[test]
fn extremal_energies_are_exact_where_stated() {
    for n in 6..=40 {
        assert_eq!(exhaustive_extremal(n, Category::EvenEven).unwrap().min_energy, 0.0);
        assert!((exhaustive_extremal(n, Category::OddOdd).unwrap().min_energy - 4.0).abs() <= 1e-12);
        if n % 2 == 1 {
            assert!((exhaustive_extremal(n, Category::Mixed).unwrap().min_energy - 2.0).abs() <= 1e-12);
        }
    }
}

#[test]
fn ranking_respects_passing_strict_links() {
    let mut checked = 0;
    for entry in catalog() {
        for n in 6..=40 {
            let Ok(chain) = expected_chain(entry.id, n) else { continue };
            let ranking = full_ranking(n, entry.category).unwrap();
            let rank_of = |c| ranking.iter().find(|r| r.config == c).map(|r| r.rank);
            for link in verify_chain(&chain, 1e-9).unwrap().links {
                if !(link.passed && link.claimed == Relation::Greater) {
                    continue;
                }
                // mixed chains close on even-even tails outside the mixed ranking
                if let (Some(l), Some(r)) = (rank_of(link.lhs), rank_of(link.rhs)) {
                    assert!(l < r, "{} at n = {n}, link {}", entry.id, link.index);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000, "{checked}");
}

#[test]
fn ranking_energies_match_oracle() {
    for n in [6, 7, 12, 21, 40] {
        for cat in Category::ALL.into_iter().filter(|c| c.defined_for(n)) {
            for r in full_ranking(n, cat).unwrap() {
                let oracle = energy_of_sidigraph(&build_adjacency(&r.config), 1e-12).unwrap();
                assert!((r.energy - oracle).abs() <= 1e-9);
            }
        }
    }
}

#[test]
fn catalog_audits_clean_against_shipped_ledger() {
    let reports = verify_catalog(6, 60, 1e-9).unwrap();
    let ledger = Ledger::shipped();
    let a = audit(&reports, &ledger, 6, 60);
    assert!(a.unexplained.is_empty(), "{:?}", &a.unexplained[..a.unexplained.len().min(5)]);
    assert!(a.stale.is_empty(), "{:?}", &a.stale[..a.stale.len().min(5)]);
    assert!(ledger.groups.iter().all(|g| g.cause != Cause::Unclassified));
}

#[test]
fn swapped_links_are_caught() {
    let mut caught = 0;
    for entry in catalog() {
        let Some(n) = (20..=40).find(|&n| entry.is_admissible(n)) else { continue };
        let chain = expected_chain(entry.id, n).unwrap();
        let report = verify_chain(&chain, 1e-9).unwrap();
        if let Some(link) = report.links.iter().find(|l| l.passed && l.claimed == Relation::Greater) {
            let flipped = verify_chain(&chain.with_swapped_link(link.index), 1e-9).unwrap();
            assert_eq!(flipped.verdict, Verdict::Deviations, "{}", entry.id);
            caught += 1;
        }
    }
    assert!(caught > 50);
}
