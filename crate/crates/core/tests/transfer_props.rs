mod common;

use quipu_core::charpoly::{charpoly_forest, charpoly_tree};
use quipu_core::scalar::Precision;
use quipu_core::spectral::{rho_tree, SolveOptions};
use quipu_core::transfer::{make_params, phi_by_join, phi_kvector_in, pq_of_rooted_in, Step};
use quipu_core::verify::pq_positivity_scan;
use quipu_core::{FamilyId, KVector, Scalar, Tree};
use rand::Rng;

fn close(a: &Scalar, b: &Scalar, rel: f64) -> bool {
    let scale = Scalar::with_val(a.prec(), b.abs_ref()).max(&Scalar::with_val(a.prec(), 1));
    Scalar::with_val(a.prec(), a - b).abs() / scale < rel
}

#[test]
fn pair_reconstructs_both_polynomials() {
    let p = Precision::default();
    let mut rng = common::rng(21);
    for _ in 0..50 {
        let n = rng.gen_range(1..30);
        let t = common::random_tree(&mut rng, n);
        let v = rng.gen_range(0..n);
        let phi = charpoly_tree(&t);
        let phi_v = charpoly_forest(&t.remove_vertex(v)).unwrap();
        for j in 0..20 {
            let lam = p.from_f64(2.05 + 0.45 * (j as f64 + 1.0) / 20.0);
            let ctx = make_params(&lam).unwrap();
            let pq = pq_of_rooted_in(&ctx, &t, v);
            let sum = Scalar::with_val(lam.prec(), &pq.p + &pq.q);
            assert!(close(&sum, &phi.eval(&lam), 1e-90));
            let mixed = Scalar::with_val(lam.prec(), &ctx.x2 * &pq.p) + Scalar::with_val(lam.prec(), &ctx.x1 * &pq.q);
            assert!(close(&mixed, &phi_v.eval(&lam), 1e-90));
        }
    }
}

/// `H` with a new vertex joined to `root`, carrying a pendant of `len`.
fn extend(h: &Tree, root: usize, len: usize) -> (Tree, usize) {
    let v = h.n();
    let mut edges = h.edges();
    edges.push((root, v));
    let mut prev = v;
    for i in 0..len {
        edges.push((prev, v + 1 + i));
        prev = v + 1 + i;
    }
    (Tree::from_edges(v + 1 + len, &edges).unwrap(), v)
}

#[test]
fn steps_match_constructions() {
    let p = Precision::default();
    let mut rng = common::rng(22);
    for _ in 0..40 {
        let n = rng.gen_range(1..20);
        let h = common::random_tree(&mut rng, n);
        let root = rng.gen_range(0..n);
        let lam = p.from_f64(rng.gen_range(2.01..3.0));
        let ctx = make_params(&lam).unwrap();
        let base = pq_of_rooted_in(&ctx, &h, root);
        for (step, len) in [(Step::A, 0), (Step::B, 1), (Step::C, 2)] {
            let (g, v) = extend(&h, root, len);
            let want = pq_of_rooted_in(&ctx, &g, v);
            let got = base.apply(step);
            assert!(close(&got.p, &want.p, 1e-85), "{step:?}");
            assert!(close(&got.q, &want.q, 1e-85), "{step:?}");
        }
        // longer pendants fall back to the generic extension
        let (g, v) = extend(&h, root, 4);
        let want = pq_of_rooted_in(&ctx, &g, v);
        let got = base.extend_with_pendant(4);
        assert!(close(&got.p, &want.p, 1e-85));
        assert!(close(&got.q, &want.q, 1e-85));
    }
}

#[test]
fn q_is_positive_at_large_lambda() {
    let p = Precision::default();
    let mut rng = common::rng(23);
    for _ in 0..50 {
        let n = rng.gen_range(3..30);
        let t = common::random_tree(&mut rng, n);
        let ctx = make_params(&p.from_i64(n as i64)).unwrap();
        for v in 0..n {
            assert!(pq_of_rooted_in(&ctx, &t, v).q > 0);
        }
    }
}

#[test]
fn family_evaluation_agrees_three_ways() {
    let p = Precision::default();
    let mut rng = common::rng(24);
    for _ in 0..30 {
        let family = FamilyId::ALL[rng.gen_range(0..3)];
        let e = rng.gen_range(6..10);
        let r = family.internal_paths(e).unwrap();
        let ks: Vec<usize> = (0..r).map(|_| rng.gen_range(0..10)).collect();
        let kv = KVector::new(family, e, ks).unwrap();
        let lam = p.from_f64(rng.gen_range(2.05..2.6));
        let ctx = make_params(&lam).unwrap();
        let want = charpoly_tree(&kv.to_tree()).eval(&lam);
        assert!(close(&phi_kvector_in(&ctx, &kv), &want, 1e-70), "{kv}");
        for i in 0..r {
            assert!(close(&phi_by_join(&ctx, &kv, i).unwrap(), &want, 1e-70), "{kv} {i}");
        }
    }
}

#[test]
fn prefix_and_suffix_pairs_nonnegative_at_and_above_rho() {
    let opts = SolveOptions::default();
    let tol = opts.precision.pow10(-40);
    let mut rng = common::rng(25);
    for _ in 0..20 {
        let e = rng.gen_range(6..10);
        let ks: Vec<usize> = (0..e - 4).map(|_| rng.gen_range(0..12)).collect();
        let kv = KVector::new(FamilyId::FamP, e, ks).unwrap();
        let rho = rho_tree(&kv.to_tree(), &opts).unwrap();
        let above = Scalar::with_val(rho.value.prec(), &rho.hi + 0.01);
        for lam in [rho.hi.clone(), above] {
            let scan = pq_positivity_scan(&kv, &lam, &opts).unwrap();
            assert!(!scan.below_rho);
            assert!(scan.all_nonnegative(&tol), "{kv}");
        }
    }
}
