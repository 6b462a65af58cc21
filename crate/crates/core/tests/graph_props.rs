mod common;

use proptest::prelude::*;
use quipu_core::graph::{build_quipu, canonical_code, compositions, describe_quipu, parse_edge_list, write_edge_list};
use quipu_core::{FamilyId, KVector};
use rand::seq::SliceRandom;
use rand::Rng;

#[test]
fn canonical_code_survives_relabelling() {
    let mut rng = common::rng(5);
    for _ in 0..10 {
        let n = rng.gen_range(2..30);
        let t = common::random_tree(&mut rng, n);
        let code = canonical_code(&t);
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_code(&t.relabel(&perm)), code);
        }
    }
}

#[test]
fn kvector_order_and_diameter() {
    for family in FamilyId::ALL {
        for e in 5..=9 {
            let Some(r) = family.internal_paths(e) else { continue };
            for n in 2 * e..=60 {
                let total = n - 2 * e;
                let all = compositions(total, r);
                let step = (all.len() / 40).max(1);
                for ks in all.into_iter().step_by(step) {
                    let kv = KVector::new(family, e, ks).unwrap();
                    let t = kv.to_tree();
                    assert_eq!(kv.n(), n);
                    assert_eq!(t.n(), n);
                    assert_eq!(t.diameter(), n - e, "{kv}");
                    assert_eq!(kv.diameter(), n - e);
                }
            }
        }
    }
}

#[test]
fn mirror_images_are_isomorphic() {
    let mut rng = common::rng(9);
    for family in [FamilyId::FamP, FamilyId::FamPDoublePrime] {
        for _ in 0..30 {
            let e = rng.gen_range(6..10);
            let r = family.internal_paths(e).unwrap();
            let ks: Vec<usize> = (0..r).map(|_| rng.gen_range(0..8)).collect();
            let mut rev = ks.clone();
            rev.reverse();
            let a = KVector::new(family, e, ks).unwrap();
            let b = KVector::new(family, e, rev).unwrap();
            assert_eq!(canonical_code(&a.to_tree()), canonical_code(&b.to_tree()));
            assert_eq!(a.mirror_canonical(), b.mirror_canonical());
        }
    }
    // P' carries its P₂ pendant at one end only
    let a = KVector::new(FamilyId::FamPPrime, 6, vec![1, 2, 5]).unwrap();
    let b = KVector::new(FamilyId::FamPPrime, 6, vec![5, 2, 1]).unwrap();
    assert_ne!(canonical_code(&a.to_tree()), canonical_code(&b.to_tree()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quipu_description_roundtrip(seed in any::<u64>(), p in 4usize..20, k in 0usize..4) {
        let mut rng = common::rng(seed);
        let k = k.min(p - 2);
        let spec = common::random_quipu(&mut rng, p, k);
        let t = build_quipu(&spec).unwrap();
        let found = describe_quipu(&t).unwrap();
        let again = build_quipu(&found).unwrap();
        prop_assert_eq!(canonical_code(&t), canonical_code(&again));
        prop_assert_eq!(found.vertex_count(), t.n());
    }

    #[test]
    fn edge_list_roundtrip(seed in any::<u64>(), n in 1usize..30) {
        let mut rng = common::rng(seed);
        let t = common::random_tree(&mut rng, n);
        let text = write_edge_list(t.graph());
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.edges(), t.edges());
    }

    #[test]
    fn kvector_text_roundtrip(e in 6usize..10, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        for family in FamilyId::ALL {
            let r = family.internal_paths(e).unwrap();
            let ks: Vec<usize> = (0..r).map(|_| rng.gen_range(0..20)).collect();
            let kv = KVector::new(family, e, ks).unwrap();
            let parsed: KVector = kv.to_string().parse().unwrap();
            prop_assert_eq!(parsed, kv);
        }
    }
}
