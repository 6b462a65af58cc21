use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use crate::graph::{FamilyId, KVector};
use crate::scalar::{to_decimal, Scalar};
use crate::spectral::{rho_tree, solve_limit_equation, LimitKind, SolveOptions};

use super::VerifyError;

/// Tree sequences whose radii approach a limit radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConvergenceKind {
    /// `P''` with internal paths `(i, k, i)`, limit `ρ''_k`.
    DoublePrimeIKJ,
    /// `P'` with internal paths `(k, j)`, limit `ρ'_k`.
    PrimeKJ,
    /// `P''` with internal paths `(i, k)`, limit `ρ''_{2k+3}`; each row also
    /// carries `ρ` of `(i, 2k+3, i)`, which must coincide.
    CorollaryKI,
}

impl ConvergenceKind {
    pub const ALL: [ConvergenceKind; 3] = [
        ConvergenceKind::DoublePrimeIKJ,
        ConvergenceKind::PrimeKJ,
        ConvergenceKind::CorollaryKI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConvergenceKind::DoublePrimeIKJ => "ikj",
            ConvergenceKind::PrimeKJ => "kj",
            ConvergenceKind::CorollaryKI => "ki",
        }
    }

    fn limit(self, k: usize) -> (LimitKind, i64) {
        match self {
            ConvergenceKind::DoublePrimeIKJ => (LimitKind::RhoDoublePrimeK, k as i64),
            ConvergenceKind::PrimeKJ => (LimitKind::RhoPrimeK, k as i64),
            ConvergenceKind::CorollaryKI => (LimitKind::RhoDoublePrimeK, 2 * k as i64 + 3),
        }
    }

    /// The tree of the sequence at `size`.
    pub fn member(self, k: usize, size: usize) -> KVector {
        let (family, e, ks) = match self {
            ConvergenceKind::DoublePrimeIKJ => (FamilyId::FamPDoublePrime, 5, vec![size, k, size]),
            ConvergenceKind::PrimeKJ => (FamilyId::FamPPrime, 5, vec![k, size]),
            ConvergenceKind::CorollaryKI => (FamilyId::FamPDoublePrime, 4, vec![size, k]),
        };
        KVector::new(family, e, ks).expect("sequence members are valid k-vectors")
    }

    fn partner(self, k: usize, size: usize) -> Option<KVector> {
        match self {
            ConvergenceKind::CorollaryKI => {
                Some(KVector::new(FamilyId::FamPDoublePrime, 5, vec![size, 2 * k + 3, size]).expect("valid"))
            }
            _ => None,
        }
    }
}

impl fmt::Display for ConvergenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConvergenceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ikj" | "DoublePrimeIKJ" => Ok(ConvergenceKind::DoublePrimeIKJ),
            "kj" | "PrimeKJ" => Ok(ConvergenceKind::PrimeKJ),
            "ki" | "CorollaryKI" => Ok(ConvergenceKind::CorollaryKI),
            other => Err(format!("unknown sequence `{other}` (expected ikj, kj, ki)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub size: usize,
    pub kv: KVector,
    pub rho: Scalar,
    /// `ρ - limit`.
    pub diff: Scalar,
    pub partner_rho: Option<Scalar>,
}

#[derive(Clone, Debug)]
pub struct ConvergenceTable {
    pub kind: ConvergenceKind,
    pub k: usize,
    pub limit: Scalar,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    pub fn all_positive(&self) -> bool {
        self.rows.iter().all(|r| r.diff > 0)
    }

    pub fn strictly_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].diff < w[0].diff)
    }

    /// Largest `|ρ - ρ_partner|` over the rows, if the sequence has partners.
    pub fn max_partner_gap(&self) -> Option<Scalar> {
        let prec = self.limit.prec();
        self.rows
            .iter()
            .filter_map(|r| {
                r.partner_rho
                    .as_ref()
                    .map(|p| Scalar::with_val(prec, &r.rho - p).abs())
            })
            .reduce(|a, b| a.max(&b))
    }

    pub const CSV_HEADER: [&'static str; 5] = ["size", "kv", "rho", "diff", "partner_rho"];

    pub fn to_csv(&self, digits: usize) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(Self::CSV_HEADER).expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.size.to_string(),
                r.kv.to_string(),
                to_decimal(&r.rho, digits),
                to_decimal(&r.diff, 12),
                r.partner_rho.as_ref().map(|p| to_decimal(p, digits)).unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let rows: Vec<_> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "size": r.size,
                    "kv": r.kv.to_string(),
                    "rho": to_decimal(&r.rho, digits),
                    "diff": to_decimal(&r.diff, 12),
                    "partner_rho": r.partner_rho.as_ref().map(|p| to_decimal(p, digits)),
                })
            })
            .collect();
        json!({
            "kind": self.kind.name(),
            "k": self.k,
            "limit": to_decimal(&self.limit, digits),
            "positive": self.all_positive(),
            "decreasing": self.strictly_decreasing(),
            "rows": rows,
        })
    }
}

/// Radii along one of the sequences and their distance to its limit.
pub fn limit_convergence(
    kind: ConvergenceKind,
    k: usize,
    sizes: &[usize],
    opts: &SolveOptions,
) -> Result<ConvergenceTable, VerifyError> {
    if sizes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(VerifyError::UnsortedSizes);
    }
    let (limit_kind, limit_k) = kind.limit(k);
    let limit = solve_limit_equation(limit_kind, limit_k, opts)?.value;
    let rows = sizes
        .par_iter()
        .map(|&size| -> Result<ConvergenceRow, VerifyError> {
            let kv = kind.member(k, size);
            let rho = rho_tree(&kv.to_tree(), opts)?.value;
            let diff = Scalar::with_val(rho.prec(), &rho - &limit);
            let partner_rho = match kind.partner(k, size) {
                Some(p) => Some(rho_tree(&p.to_tree(), opts)?.value),
                None => None,
            };
            Ok(ConvergenceRow {
                size,
                kv,
                rho,
                diff,
                partner_rho,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConvergenceTable { kind, k, limit, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_prime_sequence_decreases() {
        let t = limit_convergence(ConvergenceKind::DoublePrimeIKJ, 3, &[10, 20, 40], &SolveOptions::default()).unwrap();
        assert!(t.all_positive());
        assert!(t.strictly_decreasing());
    }

    #[test]
    fn prime_sequence_decreases() {
        let t = limit_convergence(ConvergenceKind::PrimeKJ, 4, &[10, 20, 40], &SolveOptions::default()).unwrap();
        assert!(t.all_positive(), "{}", t.to_csv(20));
        assert!(t.strictly_decreasing());
    }

    #[test]
    fn corollary_partners_agree() {
        let t = limit_convergence(ConvergenceKind::CorollaryKI, 2, &[10, 20], &SolveOptions::default()).unwrap();
        assert!(t.max_partner_gap().unwrap() < 1e-30);
        assert!(t.all_positive());
        assert!(t.strictly_decreasing());
        assert_eq!(t.to_csv(10).lines().count(), 3);
    }

    #[test]
    fn rejects_unsorted_sizes() {
        assert!(matches!(
            limit_convergence(ConvergenceKind::PrimeKJ, 4, &[20, 10], &SolveOptions::default()),
            Err(VerifyError::UnsortedSizes)
        ));
    }
}
