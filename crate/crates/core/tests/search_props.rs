use quipu_core::graph::{build_quipu, canonical_code};
use quipu_core::search::{
    brute_min, enumerate_family, enumerate_trees, family_min, free_trees, theorem_filter, Scope, SearchOptions,
    Witness,
};
use quipu_core::{FamilyId, QuipuSpec};

#[test]
fn family_minimizers_obey_structure_filter() {
    let opts = SearchOptions::default();
    for e in 6..=8 {
        for n in (2 * e + 4 * (e - 4))..(2 * e + 4 * (e - 4) + 3 * (e - 4)) {
            let rep = family_min(n, e, FamilyId::FamP, &opts).unwrap();
            let allowed = theorem_filter(n, e);
            for kv in rep.argmin_kvectors() {
                assert!(allowed.contains(&kv), "n={n} e={e} {kv}");
            }
        }
    }
}

#[test]
fn family_p_dominates_other_families() {
    // order bound 10e² - 74e + 142 is 58 for e = 6
    let opts = SearchOptions::default();
    for n in [58, 59] {
        let p = family_min(n, 6, FamilyId::FamP, &opts).unwrap();
        for other in [FamilyId::FamPPrime, FamilyId::FamPDoublePrime] {
            let q = family_min(n, 6, other, &opts).unwrap();
            assert!(p.rho.value < q.rho.value, "n={n} {other}");
        }
    }
}

#[test]
fn family_search_is_exhaustive_on_small_orders() {
    // the screened search must agree with solving every member
    let opts = SearchOptions::default();
    for (n, e, family) in [(22, 6, FamilyId::FamP), (24, 7, FamilyId::FamPPrime), (20, 6, FamilyId::FamPDoublePrime)] {
        let rep = family_min(n, e, family, &opts).unwrap();
        let mut all: Vec<_> = enumerate_family(n, e, family)
            .unwrap()
            .into_iter()
            .map(|kv| (quipu_core::spectral::rho_tree(&kv.to_tree(), &opts.solve).unwrap().value, kv))
            .collect();
        all.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        assert!(quipu_core::scalar::within(&all[0].0, &rep.rho.value, 1e-35));
        assert!(rep.argmin_kvectors().contains(&all[0].1));
    }
}

#[test]
fn tree_census_by_diameter() {
    for n in 3..=12 {
        let total = free_trees(n, 18).unwrap().count();
        let by_d: usize = (2..n).map(|d| enumerate_trees(n, d, 18).unwrap().len()).sum();
        assert_eq!(by_d, total, "n={n}");
        assert_eq!(enumerate_trees(n, n - 1, 18).unwrap().len(), 1);
        assert_eq!(enumerate_trees(n, 2, 18).unwrap().len(), 1);
    }
}

fn witness_code(w: &Witness) -> String {
    match w {
        Witness::Tree { code, .. } => code.clone(),
        other => panic!("unexpected witness {other:?}"),
    }
}

#[test]
fn brute_force_small_diameters() {
    let opts = SearchOptions::default();
    let quipu = |p, att| canonical_code(&build_quipu(&QuipuSpec::new(p, att).unwrap()).unwrap());
    for n in 6..=11 {
        let rep = brute_min(n, n - 2, Scope::AllTrees, 18, &opts).unwrap();
        assert_eq!(rep.argmin.len(), 1);
        assert_eq!(witness_code(&rep.argmin[0]), quipu(n - 1, vec![(1, 1)]));

        let rep = brute_min(n, n - 3, Scope::AllTrees, 18, &opts).unwrap();
        let codes: Vec<String> = rep.argmin.iter().map(witness_code).collect();
        assert!(codes.contains(&quipu(n - 2, vec![(1, 1), (n - 4, 1)])), "n={n}");
        // at n = 7 the extended E₆ tree also has radius exactly 2
        assert_eq!(codes.len(), if n == 7 { 2 } else { 1 }, "n={n}");
    }
}

#[test]
fn all_graphs_scope_agrees_with_trees_for_long_diameters() {
    // for D = n-2 a cycle cannot help: the tree minimizer is optimal among graphs
    let opts = SearchOptions::default();
    for n in 6..=8 {
        let trees = brute_min(n, n - 2, Scope::AllTrees, 18, &opts).unwrap();
        let graphs = brute_min(n, n - 2, Scope::AllGraphsSmall, 18, &opts).unwrap();
        assert!(quipu_core::scalar::within(&trees.rho.value, &graphs.rho.value, 1e-35), "n={n}");
    }
}
