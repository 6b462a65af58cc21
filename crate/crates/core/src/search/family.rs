use std::sync::Arc;

use rayon::prelude::*;

use crate::graph::{compositions, FamilyId, KVector};
use crate::scalar::Scalar;
use crate::spectral::{exceeds_radius, rho_tree, SolveOptions, SpectralResult, TIE_TOL};
use crate::transfer::{make_params, phi_kvector_in};

use super::{MinimizerReport, Scope, SearchError, Witness};

/// Screening stops narrowing once at most this many members survive.
const SOLVE_BUDGET: usize = 64;

/// Tunables for minimizer searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub solve: SolveOptions,
    /// Initial offset above the incumbent at which family members are screened.
    pub margin: f64,
    pub tie: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            solve: SolveOptions::default(),
            margin: 1e-4,
            tie: TIE_TOL,
        }
    }
}

/// Members of the family on `n` vertices: compositions of `n - 2e` into `r`
/// parts, keeping one of each mirror pair where the family is symmetric.
pub fn enumerate_family(n: usize, e: usize, family: FamilyId) -> Result<Vec<KVector>, SearchError> {
    let r = family
        .internal_paths(e)
        .ok_or(SearchError::EmptyFamily { n, e })?;
    if n < 2 * e {
        return Err(SearchError::EmptyFamily { n, e });
    }
    let out = compositions(n - 2 * e, r)
        .into_iter()
        .map(|ks| KVector::new(family, e, ks).expect("length matches family"))
        .filter(|kv| !family.mirror_symmetric() || kv.mirror_canonical() == *kv)
        .collect();
    Ok(out)
}

/// `⌊s⌋` and `⌈s⌉` for `s = (n-6)/(e-4) - 2 = (n-2e+2)/(e-4)`.
pub fn s_bounds(n: usize, e: usize) -> (i64, i64) {
    let num = n as i64 - 2 * e as i64 + 2;
    let den = e as i64 - 4;
    (num.div_euclid(den), -(-num).div_euclid(den))
}

/// Family-P members allowed by the structure theorem: end parts in
/// `{⌊s⌋-1, ⌊s⌋}`, middle parts in `[⌊s⌋, ⌈s⌉+1]`, each middle part
/// exceeding each end part by 0..=2, middle parts within 1 of each other.
pub fn theorem_filter(n: usize, e: usize) -> Vec<KVector> {
    if e < 6 || n < 2 * e {
        return Vec::new();
    }
    let (fl, ce) = s_bounds(n, e);
    let r = e - 4;
    let ok = |ks: &[usize]| {
        let k: Vec<i64> = ks.iter().map(|&v| v as i64).collect();
        let ends = [k[0], k[r - 1]];
        if ends.iter().any(|&v| v != fl - 1 && v != fl) {
            return false;
        }
        let middle = &k[1..r - 1];
        if middle.iter().any(|&v| v < fl || v > ce + 1) {
            return false;
        }
        for &m in middle {
            for &j in &ends {
                if !(0..=2).contains(&(m - j)) {
                    return false;
                }
            }
        }
        let lo = middle.iter().copied().min();
        let hi = middle.iter().copied().max();
        !matches!((lo, hi), (Some(a), Some(b)) if b - a > 1)
    };
    enumerate_family(n, e, FamilyId::FamP)
        .unwrap_or_default()
        .into_iter()
        .filter(|kv| ok(kv.ks()))
        .collect()
}

/// The exact minimizer set predicted for `e ∈ {6, 7, 8}` (mirror-canonical).
pub fn predicted_min(n: usize, e: usize) -> Result<Vec<KVector>, SearchError> {
    if !(6..=8).contains(&e) {
        return Err(SearchError::NoPrediction { e });
    }
    let r = e - 4;
    let total = n
        .checked_sub(2 * e)
        .ok_or(SearchError::EmptyFamily { n, e })?;
    let (k, t) = (total / r, total % r);
    if e == 8 && t == 0 && k == 0 {
        return Err(SearchError::NoPrediction { e });
    }
    let make = |ks: Vec<usize>| KVector::new(FamilyId::FamP, e, ks).expect("length matches").mirror_canonical();
    let sets: Vec<Vec<usize>> = match (e, t) {
        (6, 0) => vec![vec![k, k]],
        (6, _) => vec![vec![k, k + 1]],
        (7, 0) => vec![vec![k, k, k]],
        (7, 1) => vec![vec![k, k + 1, k]],
        (7, _) => vec![vec![k, k + 2, k]],
        (8, 0) => vec![
            vec![k, k, k, k],
            vec![k, k, k + 1, k - 1],
            vec![k - 1, k + 1, k + 1, k - 1],
        ],
        (8, 1) => vec![vec![k, k + 1, k, k]],
        (8, 2) => vec![vec![k, k + 1, k + 1, k]],
        _ => vec![vec![k, k + 1, k + 2, k]],
    };
    let mut out: Vec<KVector> = sets.into_iter().map(make).collect();
    out.sort();
    Ok(out)
}

/// Composition of `total` into `r` parts that differ by at most one, with
/// the larger parts in the middle.
fn balanced(total: usize, r: usize) -> Vec<usize> {
    let (q, extra) = (total / r, total % r);
    let mut ks = vec![q; r];
    let start = (r - extra) / 2;
    for v in ks.iter_mut().skip(start).take(extra) {
        *v += 1;
    }
    ks
}

/// Minimum spectral radius over a family.
///
/// An incumbent is solved exactly from a few well-balanced members. Members
/// are then screened by the sign of `φ` at `incumbent + margin`: a negative
/// value puts the member's spectral radius above the probe, so it cannot be
/// a minimizer. While too many members survive, the margin shrinks by a
/// factor of 100 and the survivors are screened again. The final survivors
/// are solved exactly.
pub fn family_min(n: usize, e: usize, family: FamilyId, opts: &SearchOptions) -> Result<MinimizerReport, SearchError> {
    let members = enumerate_family(n, e, family)?;
    let prec = opts.solve.precision.bits();
    let solve = |kv: &KVector| -> Result<SpectralResult, SearchError> {
        Ok(rho_tree(&kv.to_tree(), &opts.solve)?)
    };

    let mut seeds: Vec<KVector> = Vec::new();
    if family == FamilyId::FamP {
        seeds.extend(theorem_filter(n, e));
    }
    let r = family.internal_paths(e).expect("checked by enumerate_family");
    let bal = KVector::new(family, e, balanced(n - 2 * e, r))?;
    seeds.push(if family.mirror_symmetric() { bal.mirror_canonical() } else { bal });
    seeds.sort();
    seeds.dedup();
    let seed_rho: Vec<(KVector, SpectralResult)> = seeds
        .par_iter()
        .map(|kv| solve(kv).map(|r| (kv.clone(), r)))
        .collect::<Result<_, _>>()?;
    let incumbent = seed_rho
        .iter()
        .map(|(_, r)| r.value.clone())
        .min_by(|a, b| a.partial_cmp(b).expect("finite"))
        .expect("at least one seed");

    let mut survivors: Vec<&KVector> = members.iter().filter(|kv| !seeds.contains(kv)).collect();
    let mut margin = opts.margin;
    let mut probe;
    let mut any_excluded = false;
    loop {
        probe = Scalar::with_val(prec, &incumbent + margin);
        let ctx = make_params(&probe)?;
        let keep: Vec<bool> = survivors
            .par_iter()
            .map(|kv| phi_kvector_in(&Arc::clone(&ctx), kv) >= 0 && exceeds_radius(&kv.to_tree(), &probe))
            .collect();
        let before = survivors.len();
        survivors = survivors.into_iter().zip(keep).filter(|(_, k)| *k).map(|(kv, _)| kv).collect();
        any_excluded |= survivors.len() < before;
        let next = margin * 1e-2;
        if survivors.len() <= SOLVE_BUDGET || next < opts.tie * 1e3 {
            break;
        }
        margin = next;
    }
    let mut solved: Vec<(KVector, SpectralResult)> = survivors
        .par_iter()
        .map(|kv| solve(kv).map(|r| ((*kv).clone(), r)))
        .collect::<Result<_, _>>()?;
    solved.extend(seed_rho);
    solved.sort_by(|a, b| {
        a.1.value
            .partial_cmp(&b.1.value)
            .expect("finite")
            .then_with(|| a.0.cmp(&b.0))
    });

    let best = solved[0].1.clone();
    let tied = |r: &SpectralResult| Scalar::with_val(prec, &r.value - &best.value) < opts.tie;
    let mut argmin: Vec<KVector> = solved.iter().filter(|(_, r)| tied(r)).map(|(kv, _)| kv.clone()).collect();
    argmin.sort();
    let next = solved.iter().find(|(_, r)| !tied(r));
    let (gap, lower) = match next {
        Some((_, r)) => {
            let g = Scalar::with_val(prec, &r.value - &best.value);
            // a screened-out member may lie between the probe and this one
            if any_excluded && r.value > probe {
                (Some(Scalar::with_val(prec, &probe - &best.value)), true)
            } else {
                (Some(g), false)
            }
        }
        None if any_excluded => (Some(Scalar::with_val(prec, &probe - &best.value)), true),
        None => (None, false),
    };
    Ok(MinimizerReport {
        n,
        e: Some(e),
        d: n - e,
        scope: Scope::of_family(family),
        argmin: argmin.into_iter().map(Witness::Family).collect(),
        rho: best,
        runner_up_gap: gap,
        gap_is_lower_bound: lower,
        candidates: members.len(),
        solved: solved.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kv(e: usize, ks: &[usize]) -> KVector {
        KVector::new(FamilyId::FamP, e, ks.to_vec()).unwrap()
    }

    #[test]
    fn family_sizes() {
        assert_eq!(enumerate_family(16, 6, FamilyId::FamP).unwrap().len(), 3);
        assert_eq!(enumerate_family(14, 7, FamilyId::FamP).unwrap(), vec![kv(7, &[0, 0, 0])]);
        // 28 compositions, 4 palindromes: (28 + 4) / 2 after mirror dedup
        assert_eq!(enumerate_family(20, 7, FamilyId::FamP).unwrap().len(), 16);
        assert_eq!(enumerate_family(20, 7, FamilyId::FamPPrime).unwrap().len(), 84);
        assert!(enumerate_family(11, 6, FamilyId::FamP).is_err());
    }

    #[test]
    fn filter_divisible_case() {
        for e in 6..10 {
            for s in 1..6 {
                let n = s * (e - 4) + 2 * e - 2;
                let expect: Vec<usize> = (0..e - 4).map(|i| if i == 0 || i == e - 5 { s - 1 } else { s }).collect();
                assert_eq!(theorem_filter(n, e), vec![kv(e, &expect).mirror_canonical()], "e={e} s={s}");
            }
        }
    }

    #[test]
    fn filter_contains_predictions() {
        for e in 6..=8 {
            for n in 2 * e + 8..2 * e + 40 {
                let filtered = theorem_filter(n, e);
                for p in predicted_min(n, e).unwrap() {
                    assert!(filtered.contains(&p), "n={n} e={e} {p}");
                }
            }
        }
    }

    #[test]
    fn predictions() {
        assert_eq!(predicted_min(2 * 5 + 13, 6).unwrap(), vec![kv(6, &[5, 6])]);
        assert_eq!(predicted_min(3 * 4 + 15, 7).unwrap(), vec![kv(7, &[4, 5, 4])]);
        assert_eq!(predicted_min(4 * 3 + 19, 8).unwrap(), vec![kv(8, &[3, 4, 5, 3])]);
        assert_eq!(predicted_min(4 * 3 + 16, 8).unwrap().len(), 3);
        assert!(predicted_min(30, 9).is_err());
    }

    #[test]
    fn small_family_minimum() {
        let rep = family_min(2 * 8 + 12, 6, FamilyId::FamP, &SearchOptions::default()).unwrap();
        assert_eq!(rep.argmin_kvectors(), vec![kv(6, &[8, 8])]);
        assert!(rep.runner_up_gap.unwrap() > 0);
    }
}
