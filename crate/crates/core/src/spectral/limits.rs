use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::scalar::{Precision, Scalar};
use crate::transfer::{make_params, TransferParams};

use super::{SolveOptions, SpectralError, SpectralResult};

/// The three limit radii.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LimitKind {
    /// `ρ_k`: `d₂ = 2x₁^k / (1 - x₁^{k+1})`.
    RhoK,
    /// `ρ'_k`: `d₂ = √(d₁x₁) x₁^k`.
    RhoPrimeK,
    /// `ρ''_k`: `d₂ = x₁^k`.
    RhoDoublePrimeK,
}

impl LimitKind {
    pub const ALL: [LimitKind; 3] = [LimitKind::RhoK, LimitKind::RhoPrimeK, LimitKind::RhoDoublePrimeK];

    pub fn name(self) -> &'static str {
        match self {
            LimitKind::RhoK => "rho",
            LimitKind::RhoPrimeK => "rho1",
            LimitKind::RhoDoublePrimeK => "rho2",
        }
    }

    /// `d₂ - rhs`, increasing in `λ` on `(λ₀, ∞)`.
    pub fn residual(self, ctx: &TransferParams, k: i64) -> Scalar {
        let prec = ctx.prec();
        let xk = ctx.x1_pow(k);
        let rhs = match self {
            LimitKind::RhoK => {
                let den = 1u32 - ctx.x1_pow(k + 1);
                Scalar::with_val(prec, &xk * 2u32) / den
            }
            LimitKind::RhoPrimeK => Scalar::with_val(prec, &ctx.d1 * &ctx.x1).sqrt() * xk,
            LimitKind::RhoDoublePrimeK => xk,
        };
        Scalar::with_val(prec, &ctx.d2 - rhs)
    }
}

impl fmt::Display for LimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LimitKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rho" | "RhoK" => Ok(LimitKind::RhoK),
            "rho1" | "RhoPrimeK" => Ok(LimitKind::RhoPrimeK),
            "rho2" | "RhoDoublePrimeK" => Ok(LimitKind::RhoDoublePrimeK),
            other => Err(format!("unknown limit kind `{other}` (expected rho, rho1, rho2)")),
        }
    }
}

/// `√(2 + √5)`, the point where `d₂` vanishes.
pub fn lambda0(precision: Precision) -> Scalar {
    let five = precision.from_i64(5);
    (five.sqrt() + 2u32).sqrt()
}

/// `3√2/2`, the upper end of the limit-equation bracket.
pub fn bracket_cap(precision: Precision) -> Scalar {
    precision.from_i64(2).sqrt() * 3u32 / 2u32
}

/// Root in `(λ₀, ∞)` of the selected equation, by bisection on
/// `(λ₀, 3√2/2]`.
pub fn solve_limit_equation(kind: LimitKind, k: i64, opts: &SolveOptions) -> Result<SpectralResult, SpectralError> {
    let p = opts.precision;
    solve_limit_in(kind, k, lambda0(p), bracket_cap(p), opts)
}

/// As [`solve_limit_equation`] on an explicit bracket.
pub fn solve_limit_in(
    kind: LimitKind,
    k: i64,
    mut lo: Scalar,
    mut hi: Scalar,
    opts: &SolveOptions,
) -> Result<SpectralResult, SpectralError> {
    opts.check()?;
    if k < 1 {
        return Err(SpectralError::InvalidK(k));
    }
    let prec = opts.precision.bits();
    let f = |x: &Scalar| -> Result<Scalar, SpectralError> {
        let ctx = make_params(x)?;
        Ok(kind.residual(&ctx, k))
    };
    let flo = f(&lo)?;
    let fhi = f(&hi)?;
    if flo > 0 || fhi < 0 {
        return Err(SpectralError::NoSignChange { kind: kind.name(), k });
    }
    let tol = opts.precision.from_f64(opts.tol);
    let mut iterations = 0;
    while Scalar::with_val(prec, &hi - &lo) > tol {
        iterations += 1;
        let mid = Scalar::with_val(prec, &lo + &hi) / 2u32;
        if f(&mid)? < 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let value = Scalar::with_val(prec, &lo + &hi) / 2u32;
    let residual = f(&value)?.abs();
    Ok(SpectralResult {
        value,
        lo,
        hi,
        residual,
        iterations,
    })
}

/// The five equivalent forms of the `ρ_k` equation, each as `lhs - rhs`:
/// `d₂ - 2x₁^k/(1-x₁^{k+1})`, `d₂x₂^k - d₁x₁^k - 2`, `d₂ - d₁x₁^{k-1}`,
/// `d₂x₂^{(k-1)/2} - d₁x₁^{(k-1)/2}`, `d₂ - 2x₁^k - d₁x₁^{2k}`.
pub fn rho_k_forms(ctx: &TransferParams, k: i64) -> [Scalar; 5] {
    let prec = ctx.prec();
    let m = |a: &Scalar, b: Scalar| Scalar::with_val(prec, a * &b);
    let half = Scalar::with_val(prec, k - 1) / 2u32;
    let f1 = LimitKind::RhoK.residual(ctx, k);
    let f2 = m(&ctx.d2, ctx.x2_pow(k)) - m(&ctx.d1, ctx.x1_pow(k)) - 2u32;
    let f3 = Scalar::with_val(prec, &ctx.d2 - m(&ctx.d1, ctx.x1_pow(k - 1)));
    let f4 = m(&ctx.d2, ctx.x2_powf(&half)) - m(&ctx.d1, ctx.x1_powf(&half));
    let f5 = Scalar::with_val(prec, &ctx.d2 - ctx.x1_pow(k) * 2u32) - m(&ctx.d1, ctx.x1_pow(2 * k));
    [f1, f2, f3, f4, f5]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda0_value() {
        let p = Precision::default();
        let l0 = lambda0(p);
        assert!(crate::scalar::to_decimal(&l0, 12).starts_with("2.0581710272"));
        let sq: Scalar = Scalar::with_val(p.bits(), l0.square_ref()) - 2u32;
        assert!(Scalar::with_val(p.bits(), sq - p.from_i64(5).sqrt()).abs() < 1e-95);
        let ctx = make_params(&l0).unwrap();
        assert!(ctx.d2.clone().abs() < 1e-95);
    }

    #[test]
    fn rho_k_decreases_to_lambda0() {
        let o = SolveOptions::default();
        let r10 = solve_limit_equation(LimitKind::RhoK, 10, &o).unwrap().value;
        let r20 = solve_limit_equation(LimitKind::RhoK, 20, &o).unwrap().value;
        let r40 = solve_limit_equation(LimitKind::RhoK, 40, &o).unwrap().value;
        assert!(r10 > r20 && r20 > r40 && r40 > lambda0(o.precision));
        let r4 = solve_limit_equation(LimitKind::RhoK, 4, &o).unwrap().value;
        assert!(r4 < bracket_cap(o.precision));
    }

    #[test]
    fn forms_agree_at_root() {
        let o = SolveOptions::default();
        for k in [5, 9, 14] {
            let r = solve_limit_equation(LimitKind::RhoK, k, &o).unwrap();
            let ctx = make_params(&r.value).unwrap();
            for f in rho_k_forms(&ctx, k) {
                assert!(f.abs() < 1e-35, "k={k}");
            }
        }
    }

    #[test]
    fn small_k_has_no_root_below_cap() {
        let o = SolveOptions::default();
        assert!(matches!(
            solve_limit_equation(LimitKind::RhoK, 1, &o),
            Err(SpectralError::NoSignChange { .. })
        ));
        assert!(matches!(
            solve_limit_equation(LimitKind::RhoK, 0, &o),
            Err(SpectralError::InvalidK(0))
        ));
    }
}
