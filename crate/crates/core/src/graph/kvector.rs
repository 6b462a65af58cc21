use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{build_quipu, GraphError, QuipuSpec, Tree};

/// The three candidate families of caterpillar-like trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    /// Pendant `P2` at both ends of the branch run, leaves in between.
    FamP,
    /// Pendant `P2` at the first branch vertex, leaves elsewhere.
    FamPPrime,
    /// Leaves only; the first branch vertex sits next to the path end.
    FamPDoublePrime,
}

impl FamilyId {
    pub const ALL: [FamilyId; 3] = [FamilyId::FamP, FamilyId::FamPPrime, FamilyId::FamPDoublePrime];

    /// Number of internal paths, or `None` if `e` is too small.
    pub fn internal_paths(self, e: usize) -> Option<usize> {
        let offset = match self {
            FamilyId::FamP => 4,
            FamilyId::FamPPrime => 3,
            FamilyId::FamPDoublePrime => 2,
        };
        e.checked_sub(offset).filter(|&r| r >= 1)
    }

    /// Whether reversing the main path maps the family onto itself.
    pub fn mirror_symmetric(self) -> bool {
        !matches!(self, FamilyId::FamPPrime)
    }

    pub fn tag(self) -> &'static str {
        match self {
            FamilyId::FamP => "P",
            FamilyId::FamPPrime => "P1",
            FamilyId::FamPDoublePrime => "P2",
        }
    }

    /// `(first position, first pendant length, last pendant length)`.
    fn shape(self) -> (usize, usize, usize) {
        match self {
            FamilyId::FamP => (2, 2, 2),
            FamilyId::FamPPrime => (2, 2, 1),
            FamilyId::FamPDoublePrime => (1, 1, 1),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "P" => Ok(FamilyId::FamP),
            "P1" => Ok(FamilyId::FamPPrime),
            "P2" => Ok(FamilyId::FamPDoublePrime),
            other => Err(GraphError::Parse(format!("unknown family `{other}`"))),
        }
    }
}

/// A family member given by the interior counts of its internal paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KVector {
    family: FamilyId,
    e: usize,
    ks: Vec<usize>,
}

impl KVector {
    pub fn new(family: FamilyId, e: usize, ks: Vec<usize>) -> Result<Self, GraphError> {
        let r = family
            .internal_paths(e)
            .ok_or(GraphError::EValueTooSmall { family, e })?;
        if ks.len() != r {
            return Err(GraphError::WrongKLength {
                family,
                e,
                expected: r,
                got: ks.len(),
            });
        }
        Ok(KVector { family, e, ks })
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn r(&self) -> usize {
        self.ks.len()
    }

    pub fn n(&self) -> usize {
        self.ks.iter().sum::<usize>() + 2 * self.e
    }

    pub fn diameter(&self) -> usize {
        self.n() - self.e
    }

    /// Lexicographically smaller of `ks` and its reverse, for symmetric families.
    pub fn mirror_canonical(&self) -> KVector {
        if !self.family.mirror_symmetric() {
            return self.clone();
        }
        let rev: Vec<usize> = self.ks.iter().rev().copied().collect();
        if rev < self.ks {
            KVector {
                family: self.family,
                e: self.e,
                ks: rev,
            }
        } else {
            self.clone()
        }
    }

    pub fn to_quipu(&self) -> QuipuSpec {
        let (first, first_len, last_len) = self.family.shape();
        let p = self.n() - self.e + 1;
        let r = self.r();
        let mut attachments = Vec::with_capacity(r + 1);
        let mut m = first;
        for i in 0..=r {
            let len = if i == 0 {
                first_len
            } else if i == r {
                last_len
            } else {
                1
            };
            attachments.push((m, len));
            if i < r {
                m += self.ks[i] + 1;
            }
        }
        QuipuSpec { p, attachments }
    }

    pub fn to_tree(&self) -> Tree {
        build_quipu(&self.to_quipu()).expect("family quipus are always valid")
    }

    /// Short form `k=3,4` used in reports.
    pub fn ks_string(&self) -> String {
        let parts: Vec<String> = self.ks.iter().map(|k| k.to_string()).collect();
        format!("k={}", parts.join(","))
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:e={}:{}", self.family, self.e, self.ks_string())
    }
}

impl FromStr for KVector {
    type Err = GraphError;

    /// Parses `P:e=6:k=3,4`; families are `P`, `P1`, `P2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| GraphError::Parse(format!("{msg} in k-vector `{s}`"));
        let mut parts = s.trim().split(':');
        let family: FamilyId = parts.next().ok_or_else(|| bad("missing family"))?.parse()?;
        let e = parts
            .next()
            .and_then(|p| p.trim().strip_prefix("e="))
            .ok_or_else(|| bad("missing e="))?
            .trim()
            .parse::<usize>()
            .map_err(|_| bad("invalid e"))?;
        let ks_text = parts
            .next()
            .and_then(|p| p.trim().strip_prefix("k="))
            .ok_or_else(|| bad("missing k="))?;
        if parts.next().is_some() {
            return Err(bad("trailing fields"));
        }
        let ks = ks_text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad("invalid interior count")))
            .collect::<Result<Vec<_>, _>>()?;
        KVector::new(family, e, ks)
    }
}

/// All compositions of `total` into `parts` nonnegative parts, in
/// lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0; parts];
    fill(&mut cur, 0, total, &mut out);
    out
}

fn fill(cur: &mut Vec<usize>, idx: usize, left: usize, out: &mut Vec<Vec<usize>>) {
    if idx + 1 == cur.len() {
        cur[idx] = left;
        out.push(cur.clone());
        return;
    }
    for v in 0..=left {
        cur[idx] = v;
        fill(cur, idx + 1, left - v, out);
    }
}
