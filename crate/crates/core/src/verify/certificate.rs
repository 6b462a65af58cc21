use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::graph::{FamilyId, KVector};
use crate::scalar::{to_decimal, to_decimal_full, Scalar};
use crate::spectral::{rho_tree, SolveOptions, SpectralResult};
use crate::transfer::{make_params, TransferParams};

use super::VerifyError;

/// Which inequality a check evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CheckId {
    /// `2x₁^s/(1-x₁^{s+1}) ≤ d₂`.
    AverageLower,
    /// `d₂ ≤ 2x₁^{⌊s⌋}/(1-x₁^{⌊s⌋+1})`.
    AverageUpper,
    /// `c̄x₁^{k_i+1} ≤ d₂` for a middle index.
    MiddleLower,
    /// `d₂ ≤ c̄x₁^{k_i-1}` for a middle index.
    MiddleUpper,
    /// `√(c̄d₁)x₁^{k_i+1} ≤ d₂` for an end index.
    EndLower,
    /// `d₂ ≤ √(c̄d₁)x₁^{k_i}` for an end index.
    EndUpper,
}

impl CheckId {
    pub fn name(self) -> &'static str {
        match self {
            CheckId::AverageLower => "avg-lower",
            CheckId::AverageUpper => "avg-upper",
            CheckId::MiddleLower => "mid-lower",
            CheckId::MiddleUpper => "mid-upper",
            CheckId::EndLower => "end-lower",
            CheckId::EndUpper => "end-upper",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One inequality `x ≤ y`; `slack = y - x`.
#[derive(Clone, Debug)]
pub struct CertificateCheck {
    /// 1-based internal-path index, or 0 for the average bounds.
    pub index: usize,
    pub id: CheckId,
    pub satisfied: bool,
    pub slack: Scalar,
}

#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub n: usize,
    pub e: usize,
    pub kv: KVector,
    pub rho: SpectralResult,
    /// `(n - 2e + 2)/(e - 4)`.
    pub s: Scalar,
    /// Mean of the `k_i`.
    pub k_bar: Scalar,
    pub d2_at_rho: Scalar,
    pub lower: Scalar,
    pub upper: Scalar,
    pub c_bar: Scalar,
    /// Slack below which a check fails: ten enclosure widths.
    pub tolerance: Scalar,
    pub checks: Vec<CertificateCheck>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.satisfied)
    }

    pub fn failures(&self) -> Vec<&CertificateCheck> {
        self.checks.iter().filter(|c| !c.satisfied).collect()
    }

    pub fn to_json(&self, digits: Option<usize>) -> serde_json::Value {
        let f = |x: &Scalar| match digits {
            Some(d) => to_decimal(x, d),
            None => to_decimal_full(x),
        };
        let checks: Vec<_> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "index": c.index,
                    "id": c.id.name(),
                    "satisfied": c.satisfied,
                    "slack": to_decimal(&c.slack, 12),
                })
            })
            .collect();
        json!({
            "n": self.n,
            "e": self.e,
            "kv": self.kv.to_string(),
            "rho": self.rho.to_json(digits),
            "s": f(&self.s),
            "k_bar": f(&self.k_bar),
            "d2_at_rho": f(&self.d2_at_rho),
            "lower": f(&self.lower),
            "upper": f(&self.upper),
            "c_bar": f(&self.c_bar),
            "tolerance": to_decimal(&self.tolerance, 6),
            "passed": self.passed(),
            "checks": checks,
        })
    }
}

impl Serialize for CertificateReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json(None).serialize(s)
    }
}

/// `2x₁^t/(1 - x₁^{t+1})`.
fn average_bound(ctx: &TransferParams, t: &Scalar) -> Scalar {
    let prec = ctx.prec();
    let xt = ctx.x1_powf(t);
    let t1 = Scalar::with_val(prec, t + 1u32);
    let den = 1u32 - ctx.x1_powf(&t1);
    Scalar::with_val(prec, &xt * 2u32) / den
}

/// Evaluates the averaging bounds and the per-path bounds on `d₂` at the
/// spectral radius of the family tree `kv`.
pub fn certify_minimizer(n: usize, e: usize, kv: &KVector, opts: &SolveOptions) -> Result<CertificateReport, VerifyError> {
    if kv.family() != FamilyId::FamP {
        return Err(VerifyError::WrongFamily(kv.family()));
    }
    if kv.e() != e {
        return Err(VerifyError::EMismatch { expected: e, got: kv.e() });
    }
    if kv.n() != n {
        return Err(VerifyError::OrderMismatch { expected: n, got: kv.n() });
    }
    let r = kv.r();
    if r < 2 {
        return Err(VerifyError::TooFewPaths);
    }
    let rho = rho_tree(&kv.to_tree(), opts)?;
    let ctx = make_params(&rho.value)?;
    let prec = ctx.prec();
    let sc = |v: i64| Scalar::with_val(prec, v);

    let s = sc(n as i64 - 2 * e as i64 + 2) / sc(e as i64 - 4);
    let total: usize = kv.ks().iter().sum();
    let k_bar = sc(total as i64) / sc(r as i64);
    let s_floor = Scalar::with_val(prec, s.floor_ref());
    let lower = average_bound(&ctx, &s);
    let upper = average_bound(&ctx, &s_floor);
    let d2 = ctx.d2.clone();
    let d1d2 = Scalar::with_val(prec, &ctx.d1 * &ctx.d2);
    let disc = Scalar::with_val(prec, rho.value.square_ref()) + d1d2 * 4u32;
    let c_bar: Scalar = (disc.sqrt() + &rho.value) / 2u32;
    let end_coef = Scalar::with_val(prec, &c_bar * &ctx.d1).sqrt();
    let tolerance = rho.width() * 10u32;

    let mut checks = Vec::new();
    let mut push = |index: usize, id: CheckId, small: &Scalar, big: &Scalar| {
        let slack = Scalar::with_val(prec, big - small);
        let satisfied = slack >= -tolerance.clone();
        checks.push(CertificateCheck {
            index,
            id,
            satisfied,
            slack,
        });
    };
    push(0, CheckId::AverageLower, &lower, &d2);
    push(0, CheckId::AverageUpper, &d2, &upper);
    for (i, &k) in kv.ks().iter().enumerate() {
        let k = k as i64;
        let index = i + 1;
        if index == 1 || index == r {
            let lo = Scalar::with_val(prec, &end_coef * ctx.x1_pow(k + 1));
            let hi = Scalar::with_val(prec, &end_coef * ctx.x1_pow(k));
            push(index, CheckId::EndLower, &lo, &d2);
            push(index, CheckId::EndUpper, &d2, &hi);
        } else {
            let lo = Scalar::with_val(prec, &c_bar * ctx.x1_pow(k + 1));
            let hi = Scalar::with_val(prec, &c_bar * ctx.x1_pow(k - 1));
            push(index, CheckId::MiddleLower, &lo, &d2);
            push(index, CheckId::MiddleUpper, &d2, &hi);
        }
    }
    Ok(CertificateReport {
        n,
        e,
        kv: kv.clone(),
        rho,
        s,
        k_bar,
        d2_at_rho: d2,
        lower,
        upper,
        c_bar,
        tolerance,
        checks,
    })
}
