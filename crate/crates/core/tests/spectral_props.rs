mod common;

use quipu_core::graph::{build_quipu, describe_quipu};
use quipu_core::search::{family_min, SearchOptions};
use quipu_core::spectral::{
    lambda0, rho_forest, rho_tree, second_largest_root, solve_limit_equation, LimitKind, SolveOptions,
};
use quipu_core::transfer::{make_params, phi_kvector_in};
use quipu_core::{FamilyId, KVector, Scalar, Tree};
use rand::Rng;

fn opts() -> SolveOptions {
    SolveOptions::new(quipu_core::Precision::digits(60), 1e-30)
}

fn rho(t: &Tree) -> Scalar {
    rho_tree(t, &opts()).unwrap().value
}

#[test]
fn interlacing_at_random_vertices() {
    let o = opts();
    let mut rng = common::rng(31);
    let mut strict_checked = 0;
    for _ in 0..60 {
        let n = rng.gen_range(3..22);
        let t = common::random_tree(&mut rng, n);
        let v = rng.gen_range(0..n);
        let g = rho(&t);
        let forest = t.remove_vertex(v);
        let minus = rho_forest(&forest, &o).unwrap().value;
        assert!(minus < g, "ρ(G-v) < ρ(G) fails");
        let l2 = second_largest_root(&t, &o).unwrap();
        // λ₂(G) = ρ(G-v) when two components of G-v share the top radius
        let tops = forest
            .components()
            .iter()
            .filter(|c| {
                let sub = Tree::from_graph(forest.induced(c)).unwrap();
                let r = rho_tree(&sub, &o).unwrap().value;
                Scalar::with_val(r.prec(), &r - &minus).abs() < 1e-25
            })
            .count();
        let slack = Scalar::with_val(l2.prec(), &minus - &l2);
        if tops == 1 {
            assert!(slack > 1e-25, "λ₂ < ρ(G-v) fails");
            strict_checked += 1;
        } else {
            assert!(slack > -1e-25);
        }
    }
    assert!(strict_checked >= 30);
}

#[test]
fn leaf_deletion_decreases_radius() {
    let mut rng = common::rng(32);
    for _ in 0..50 {
        let n = rng.gen_range(3..30);
        let t = common::random_tree(&mut rng, n);
        let leaves = t.leaves();
        let v = leaves[rng.gen_range(0..leaves.len())];
        assert!(rho(&t.remove_leaf(v).unwrap()) < rho(&t));
    }
}

/// The exceptional tree whose internal subdivision keeps `ρ = 2`: a path
/// carrying a leaf at its second and second-to-last vertices.
fn is_double_broom(t: &Tree) -> bool {
    describe_quipu(t).is_some_and(|q| q.attachments == vec![(1, 1), (q.p - 2, 1)])
}

#[test]
fn subdivision_monotonicity() {
    let mut rng = common::rng(33);
    let (mut inner, mut outer) = (0, 0);
    while inner < 50 || outer < 50 {
        let p = rng.gen_range(5..20);
        let k = rng.gen_range(1..4.min(p - 2) + 1);
        let t = build_quipu(&common::random_quipu(&mut rng, p, k)).unwrap();
        let base = rho(&t);
        let internal = t.internal_path_edges();
        if !internal.is_empty() && !is_double_broom(&t) {
            let (u, v) = internal[rng.gen_range(0..internal.len())];
            assert!(rho(&t.subdivide_edge(u, v).unwrap()) < base);
            inner += 1;
        }
        let external: Vec<_> = t.edges().into_iter().filter(|e| !internal.contains(e)).collect();
        let (u, v) = external[rng.gen_range(0..external.len())];
        assert!(rho(&t.subdivide_edge(u, v).unwrap()) > base);
        outer += 1;
    }
}

#[test]
fn double_broom_is_the_exception() {
    let t = build_quipu(&quipu_core::QuipuSpec::new(8, vec![(1, 1), (6, 1)]).unwrap()).unwrap();
    let (u, v) = t.internal_path_edges()[0];
    let two = opts().precision.from_i64(2);
    assert!(quipu_core::scalar::within(&rho(&t), &two, 1e-28));
    assert!(quipu_core::scalar::within(&rho(&t.subdivide_edge(u, v).unwrap()), &two, 1e-28));
}

#[test]
fn ends_swap_equality() {
    for k in 2..=5 {
        for i in 4..=8 {
            let a = KVector::new(FamilyId::FamPDoublePrime, 4, vec![i, k]).unwrap();
            let b = KVector::new(FamilyId::FamPDoublePrime, 5, vec![i, 2 * k + 3, i]).unwrap();
            assert!(quipu_core::scalar::within(&rho(&a.to_tree()), &rho(&b.to_tree()), 1e-28), "{k} {i}");
        }
    }
}

#[test]
fn shared_subgraph_comparison() {
    // moving a branch vertex one step along the main path keeps G - leaf fixed
    let mut rng = common::rng(34);
    let mut decided = 0;
    for _ in 0..40 {
        let e = rng.gen_range(6..9);
        let r = e - 4;
        let mut ks: Vec<usize> = (0..r).map(|_| rng.gen_range(1..10)).collect();
        let i = rng.gen_range(0..r - 1);
        ks[i] = ks[i].max(1);
        let g1 = KVector::new(FamilyId::FamP, e, ks.clone()).unwrap();
        ks[i] += 1;
        ks[i + 1] = ks[i + 1].saturating_sub(1);
        if ks.iter().sum::<usize>() != g1.ks().iter().sum::<usize>() {
            continue;
        }
        let g2 = KVector::new(FamilyId::FamP, e, ks).unwrap();
        let r1 = rho(&g1.to_tree());
        let r2 = rho(&g2.to_tree());
        let ctx = make_params(&r1).unwrap();
        let sign = phi_kvector_in(&ctx, &g2);
        if sign > 1e-20 {
            assert!(r1 > r2, "{g1} vs {g2}");
            decided += 1;
        } else if sign < -1e-20 {
            assert!(r1 < r2, "{g1} vs {g2}");
            decided += 1;
        }
    }
    assert!(decided >= 20);
}

#[test]
fn minimizer_radius_within_universal_bounds() {
    let lo = lambda0(opts().precision);
    let hi = Scalar::with_val(lo.prec(), 18).sqrt() / 2u32;
    let search = SearchOptions {
        solve: opts(),
        ..SearchOptions::default()
    };
    // the upper bound needs n ≥ 6(e-4) + 6, the order of the balanced k=4 member
    for (n, e) in [(18, 6), (30, 6), (24, 7), (31, 7), (30, 8), (36, 9), (41, 9)] {
        assert!(n >= 6 * (e - 4) + 6);
        let rep = family_min(n, e, FamilyId::FamP, &search).unwrap();
        assert!(rep.rho.value >= lo && rep.rho.value < hi, "n={n} e={e}");
    }
}

#[test]
fn limit_radii_ordering() {
    let o = opts();
    let solve = |kind, k| solve_limit_equation(kind, k, &o).unwrap().value;
    for k in [7i64, 12, 25, 40] {
        let r = solve(LimitKind::RhoK, k);
        let r1 = solve(LimitKind::RhoPrimeK, k);
        let r2 = solve(LimitKind::RhoDoublePrimeK, k);
        assert!(r2 < r1 && r1 < r);
        assert!(r < solve(LimitKind::RhoDoublePrimeK, k - 4));
        assert!(r < solve(LimitKind::RhoPrimeK, k - 3));
    }
}
