use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::graph::{FamilyId, KVector, QuipuSpec};
use crate::scalar::{to_decimal, to_decimal_full, Scalar};
use crate::spectral::SpectralResult;

/// What a search ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scope {
    FamilyP,
    FamilyPPrime,
    FamilyPDoublePrime,
    AllTrees,
    AllGraphsSmall,
}

impl Scope {
    pub fn of_family(family: FamilyId) -> Scope {
        match family {
            FamilyId::FamP => Scope::FamilyP,
            FamilyId::FamPPrime => Scope::FamilyPPrime,
            FamilyId::FamPDoublePrime => Scope::FamilyPDoublePrime,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scope::FamilyP => "FamilyP",
            Scope::FamilyPPrime => "FamilyPPrime",
            Scope::FamilyPDoublePrime => "FamilyPDoublePrime",
            Scope::AllTrees => "AllTrees",
            Scope::AllGraphsSmall => "AllGraphsSmall",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "FamilyP" | "P" => Ok(Scope::FamilyP),
            "FamilyPPrime" | "P1" => Ok(Scope::FamilyPPrime),
            "FamilyPDoublePrime" | "P2" => Ok(Scope::FamilyPDoublePrime),
            "AllTrees" | "trees" => Ok(Scope::AllTrees),
            "AllGraphsSmall" | "graphs" => Ok(Scope::AllGraphsSmall),
            other => Err(format!("unknown scope `{other}`")),
        }
    }
}

/// One minimizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Family(KVector),
    Tree {
        code: String,
        quipu: Option<QuipuSpec>,
        edges: Vec<(usize, usize)>,
    },
    Graph {
        edges: Vec<(usize, usize)>,
    },
}

impl Witness {
    /// Short text form: `k=3,4` for family members, the quipu description
    /// for open quipus, the canonical code for other trees and an edge
    /// list for graphs.
    pub fn label(&self) -> String {
        match self {
            Witness::Family(kv) => kv.ks_string(),
            Witness::Tree { code, quipu, .. } => match quipu {
                Some(q) => q.to_string(),
                None => format!("tree:{code}"),
            },
            Witness::Graph { edges } => {
                let parts: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                format!("graph:{}", parts.join(","))
            }
        }
    }

    pub fn kvector(&self) -> Option<&KVector> {
        match self {
            Witness::Family(kv) => Some(kv),
            _ => None,
        }
    }
}

/// Outcome of a minimizer search.
#[derive(Clone, Debug)]
pub struct MinimizerReport {
    pub n: usize,
    pub e: Option<usize>,
    pub d: usize,
    pub scope: Scope,
    /// Every candidate within tie tolerance of the minimum.
    pub argmin: Vec<Witness>,
    pub rho: SpectralResult,
    /// Distance from the minimum to the best non-tied candidate.
    pub runner_up_gap: Option<Scalar>,
    /// Set when the runner-up was excluded by screening, so the gap is only
    /// a lower bound.
    pub gap_is_lower_bound: bool,
    /// Candidates considered and candidates solved exactly.
    pub candidates: usize,
    pub solved: usize,
}

impl MinimizerReport {
    pub fn argmin_labels(&self) -> Vec<String> {
        self.argmin.iter().map(Witness::label).collect()
    }

    pub fn argmin_kvectors(&self) -> Vec<KVector> {
        self.argmin.iter().filter_map(|w| w.kvector().cloned()).collect()
    }

    pub fn to_json(&self, digits: Option<usize>) -> serde_json::Value {
        json!({
            "n": self.n,
            "e": self.e,
            "D": self.d,
            "scope": self.scope.name(),
            "argmin": self.argmin_labels(),
            "rho": self.rho.to_json(digits),
            "runner_up_gap": self.runner_up_gap.as_ref().map(|g| to_decimal(g, 12)),
            "gap_is_lower_bound": self.gap_is_lower_bound,
            "candidates": self.candidates,
            "solved": self.solved,
        })
    }

    pub const CSV_HEADER: [&'static str; 7] = ["n", "e", "D", "scope", "argmin", "rho", "gap"];

    pub fn csv_record(&self, digits: Option<usize>) -> Vec<String> {
        let rho = match digits {
            Some(d) => to_decimal(&self.rho.value, d),
            None => to_decimal_full(&self.rho.value),
        };
        let gap = match &self.runner_up_gap {
            Some(g) if self.gap_is_lower_bound => format!(">{}", to_decimal(g, 12)),
            Some(g) => to_decimal(g, 12),
            None => String::new(),
        };
        vec![
            self.n.to_string(),
            self.e.map(|e| e.to_string()).unwrap_or_default(),
            self.d.to_string(),
            self.scope.name().to_string(),
            self.argmin_labels().join(";"),
            rho,
            gap,
        ]
    }
}

/// Writes reports as CSV with the standard header.
pub fn reports_to_csv(reports: &[MinimizerReport], digits: Option<usize>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(MinimizerReport::CSV_HEADER).expect("in-memory csv");
    for r in reports {
        w.write_record(r.csv_record(digits)).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}
