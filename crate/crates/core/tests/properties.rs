use num_complex::Complex64;
use proptest::prelude::*;

use sidigraph::closed_form::energy_config;
use sidigraph::spectra::{
    char_poly, cycle_spectrum, energy, energy_of_sidigraph, poly_roots, spectrum_of_sidigraph,
    whole_matrix_spectrum, Spectrum,
};
use sidigraph::{build_adjacency, build_adjacency_placed, enumerate_class, BicyclicConfig, CycleSpec, Sign};

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Negative)]
}

/// Configs on at most `max_n` vertices, with slack for isolated vertices.
fn config(max_n: usize) -> impl Strategy<Value = BicyclicConfig> {
    (2..=max_n - 2, 2..=max_n - 2, sign(), sign(), 0..3usize)
        .prop_filter("fits", move |(p, q, _, _, extra)| p + q + extra <= max_n)
        .prop_map(|(p, q, sp, sq, extra)| BicyclicConfig::from_parts(p + q + extra, p, sp, q, sq).unwrap())
}

fn sorted(s: &Spectrum) -> Vec<Complex64> {
    let mut v = s.values().to_vec();
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    v
}

fn same_multiset(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    let mut left = a.values().to_vec();
    b.values().iter().all(|z| match left.iter().position(|w| (w - z).norm() <= tol) {
        Some(i) => {
            left.swap_remove(i);
            true
        }
        None => false,
    }) && left.is_empty()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn whole_matrix_spectrum_is_conjugate_closed(c in config(16)) {
        let s = whole_matrix_spectrum(&build_adjacency(&c), 1e-12).unwrap();
        prop_assert_eq!(s.len(), c.n());
        prop_assert!(s.is_conjugate_closed(1e-9));
    }

    #[test]
    fn relabeling_keeps_energy(c in config(14), seed in any::<u64>()) {
        let g = build_adjacency(&c);
        let mut perm: Vec<usize> = (0..c.n()).collect();
        let mut state = seed;
        for i in (1..perm.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm).unwrap();
        let e_g = energy_of_sidigraph(&g, 1e-12).unwrap();
        prop_assert!((e_g - energy_of_sidigraph(&h, 1e-12).unwrap()).abs() <= 1e-12);
        let w_g = energy(&whole_matrix_spectrum(&g, 1e-12).unwrap());
        let w_h = energy(&whole_matrix_spectrum(&h, 1e-12).unwrap());
        prop_assert!((w_g - w_h).abs() <= 1e-9);
    }

    #[test]
    fn sign_placement_is_isospectral(c in config(14), a in 0..16usize, b in 0..16usize) {
        let base = whole_matrix_spectrum(&build_adjacency(&c), 1e-12).unwrap();
        let moved = whole_matrix_spectrum(&build_adjacency_placed(&c, [a, b]).unwrap(), 1e-12).unwrap();
        prop_assert!(same_multiset(&base, &moved, 1e-9), "{:?} vs {:?}", sorted(&base), sorted(&moved));
    }

    #[test]
    fn root_residuals_are_small(c in config(16)) {
        let tol = 1e-12;
        let p = char_poly(&build_adjacency(&c));
        let bound = p.degree() as f64 * tol * p.max_abs_coefficient();
        for z in poly_roots(&p, tol).unwrap().values() {
            prop_assert!(p.eval_f64(*z).norm() <= bound, "|p({})| = {}", z, p.eval_f64(*z).norm());
        }
    }

    #[test]
    fn component_energy_matches_whole_matrix(c in config(16)) {
        let g = build_adjacency(&c);
        let by_components = energy_of_sidigraph(&g, 1e-12).unwrap();
        let whole = energy(&whole_matrix_spectrum(&g, 1e-12).unwrap());
        prop_assert!((by_components - whole).abs() <= 1e-9);
        prop_assert!((by_components - energy_config(&c)).abs() <= 1e-9);
    }

    #[test]
    fn spectrum_is_union_of_cycle_spectra(c in config(16)) {
        let [a, b] = c.cycles();
        let mut expected = cycle_spectrum(a).union(&cycle_spectrum(b));
        expected = expected.union(&Spectrum::new(vec![Complex64::new(0.0, 0.0); c.isolated_vertices()]));
        let s = spectrum_of_sidigraph(&build_adjacency(&c), 1e-12).unwrap();
        prop_assert!(same_multiset(&s, &expected, 1e-12));
    }
}

#[test]
fn odd_cycles_are_sign_blind() {
    for k in (3..=199).step_by(2) {
        let pos = energy(&cycle_spectrum(CycleSpec::positive(k).unwrap()));
        let neg = energy(&cycle_spectrum(CycleSpec::negative(k).unwrap()));
        assert!((pos - neg).abs() <= 1e-12, "k = {k}");
    }
}

#[test]
fn enumeration_is_canonical_and_duplicate_free() {
    for n in 4..=24 {
        let configs = enumerate_class(n).unwrap();
        let mut sorted = configs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, configs, "n = {n}");
        for c in &configs {
            let [a, b] = c.cycles();
            let swapped = BicyclicConfig::new(n, b, a).unwrap();
            assert_eq!(&swapped, c);
            assert!(a.order() + b.order() <= n);
        }
    }
}
