use serde_json::json;

use crate::graph::{FamilyId, KVector};
use crate::scalar::{to_decimal, Scalar};
use crate::spectral::{rho_tree, SolveOptions, SpectralResult};
use crate::transfer::{make_params, prefix_pairs, suffix_pairs};

use super::VerifyError;

#[derive(Clone, Debug)]
pub struct PositivityEntry {
    /// `"L0"`..`"L{r-1}"` for prefix pairs, `"R2"`..`"R{r+1}"` for suffix pairs.
    pub label: String,
    pub p: Scalar,
    pub q: Scalar,
}

impl PositivityEntry {
    pub fn nonnegative(&self, tol: &Scalar) -> bool {
        let floor = Scalar::with_val(self.p.prec(), -tol);
        self.p >= floor && self.q >= floor
    }
}

#[derive(Clone, Debug)]
pub struct PositivityScan {
    pub kv: KVector,
    pub lambda: Scalar,
    pub rho: SpectralResult,
    /// Set when `λ < ρ`, where nonnegativity is not expected.
    pub below_rho: bool,
    pub entries: Vec<PositivityEntry>,
}

impl PositivityScan {
    pub fn all_nonnegative(&self, tol: &Scalar) -> bool {
        self.entries.iter().all(|e| e.nonnegative(tol))
    }

    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let entries: Vec<_> = self
            .entries
            .iter()
            .map(|e| json!({"pair": e.label, "p": to_decimal(&e.p, digits), "q": to_decimal(&e.q, digits)}))
            .collect();
        json!({
            "kv": self.kv.to_string(),
            "lambda": to_decimal(&self.lambda, digits),
            "rho": to_decimal(&self.rho.value, digits),
            "below_rho": self.below_rho,
            "entries": entries,
        })
    }
}

/// `(p, q)` of every prefix pair `L_i` and suffix pair `R_j` of `kv` at `λ`.
/// A `λ` below the spectral radius is flagged rather than rejected.
pub fn pq_positivity_scan(kv: &KVector, lambda: &Scalar, opts: &SolveOptions) -> Result<PositivityScan, VerifyError> {
    if kv.family() != FamilyId::FamP {
        return Err(VerifyError::WrongFamily(kv.family()));
    }
    let rho = rho_tree(&kv.to_tree(), opts)?;
    let ctx = make_params(lambda)?;
    let below_rho = *lambda < rho.lo;
    let mut entries = Vec::new();
    for (i, pq) in prefix_pairs(&ctx, kv).into_iter().enumerate() {
        entries.push(PositivityEntry {
            label: format!("L{i}"),
            p: pq.p,
            q: pq.q,
        });
    }
    for (j, pq) in suffix_pairs(&ctx, kv).into_iter().enumerate() {
        entries.push(PositivityEntry {
            label: format!("R{}", j + 2),
            p: pq.p,
            q: pq.q,
        });
    }
    Ok(PositivityScan {
        kv: kv.clone(),
        lambda: lambda.clone(),
        rho,
        below_rho,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Precision;

    fn tol() -> Scalar {
        Precision::default().pow10(-60)
    }

    #[test]
    fn first_prefix_is_p5_centre() {
        let p = Precision::default();
        let kv = KVector::new(FamilyId::FamP, 6, vec![5, 5]).unwrap();
        let scan = pq_positivity_scan(&kv, &p.ratio(5, 2), &SolveOptions::default()).unwrap();
        let l0 = &scan.entries[0];
        assert_eq!(l0.label, "L0");
        assert!(crate::scalar::within(&l0.p, &p.ratio(133, 32), 1e-90));
        assert!(crate::scalar::within(&l0.q, &p.ratio(77, 2), 1e-90));
        let last = scan.entries.last().unwrap();
        assert_eq!(last.label, "R3");
        assert!(crate::scalar::within(&last.p, &l0.p, 1e-90));
    }

    #[test]
    fn nonnegative_above_rho() {
        let opts = SolveOptions::default();
        let kv = KVector::new(FamilyId::FamP, 6, vec![5, 5]).unwrap();
        let rho = rho_tree(&kv.to_tree(), &opts).unwrap().value;
        let probe = Scalar::with_val(rho.prec(), &rho + 0.01);
        let scan = pq_positivity_scan(&kv, &probe, &opts).unwrap();
        assert_eq!(scan.entries.len(), 4);
        assert!(!scan.below_rho);
        assert!(scan.all_nonnegative(&tol()));
    }

    #[test]
    fn strictly_positive_at_three() {
        let opts = SolveOptions::default();
        let three = opts.precision.from_i64(3);
        for ks in [vec![0, 0, 0], vec![4, 1, 7], vec![2, 9, 2, 0]] {
            let kv = KVector::new(FamilyId::FamP, ks.len() + 4, ks).unwrap();
            let scan = pq_positivity_scan(&kv, &three, &opts).unwrap();
            assert!(scan.entries.iter().all(|e| e.p > 0 && e.q > 0));
        }
    }

    #[test]
    fn flags_low_lambda() {
        let opts = SolveOptions::default();
        let kv = KVector::new(FamilyId::FamP, 6, vec![5, 5]).unwrap();
        let scan = pq_positivity_scan(&kv, &opts.precision.from_f64(2.05), &opts).unwrap();
        assert!(scan.below_rho);
    }
}
