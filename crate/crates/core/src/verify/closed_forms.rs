//! Closed-form evaluations of specific family polynomials and differences.
//! Each is checked against the transfer product and the exact charpoly.

use rug::ops::Pow;

use crate::scalar::Scalar;
use crate::transfer::{Mat2, TransferParams};

fn lambda_sq_minus_one(ctx: &TransferParams) -> Scalar {
    Scalar::with_val(ctx.prec(), ctx.lambda.square_ref()) - 1u32
}

fn mul(ctx: &TransferParams, a: &Scalar, b: &Scalar) -> Scalar {
    Scalar::with_val(ctx.prec(), a * b)
}

/// `φ` of the `P''` tree with internal paths `(l, k, l)`:
///
/// `x₂^{2l-k+1}(d₂x₂+x₁²)²/(x₂-x₁)⁵ · [((d₂x₂^k)²-1) - 2x₁^{2l-k+3}(d₁x₁^k+d₂x₂^k)
///  - x₁^{2(2l-k+3)}((d₁x₁^k)²-1)]`.
pub fn phi_double_prime_symmetric(ctx: &TransferParams, l: usize, k: usize) -> Scalar {
    let (l, k) = (l as i64, k as i64);
    let a = mul(ctx, &ctx.d1, &ctx.x1_pow(k));
    let b = mul(ctx, &ctx.d2, &ctx.x2_pow(k));
    let t = 2 * l - k + 3;
    let mut bracket = Scalar::with_val(ctx.prec(), b.square_ref()) - 1u32;
    bracket -= Scalar::with_val(ctx.prec(), &a + &b) * ctx.x1_pow(t) * 2u32;
    bracket -= (Scalar::with_val(ctx.prec(), a.square_ref()) - 1u32) * ctx.x1_pow(2 * t);
    let head = mul(ctx, &ctx.d2, &ctx.x2) + ctx.x1_pow(2);
    let head = Scalar::with_val(ctx.prec(), head.square_ref());
    let den = Scalar::with_val(ctx.prec(), (&ctx.gap).pow(5u32));
    bracket * head * ctx.x2_pow(2 * l - k + 1) / den
}

/// `φ` of the `P'` tree with internal paths `(k, j)`, `k` next to the
/// pendant `P₂`:
///
/// `x₂^{j+k+1}(λ²-1)(d₂x₂+x₁²)/(x₂-x₁)³ · (d₂² - d₁x₁^{2k+1} - d₂x₁^{2j+3} - d₁²x₁^{2j+2k+4})`.
pub fn phi_prime_two_paths(ctx: &TransferParams, k: usize, j: usize) -> Scalar {
    let (k, j) = (k as i64, j as i64);
    let prec = ctx.prec();
    let mut bracket = Scalar::with_val(prec, ctx.d2.square_ref());
    bracket -= mul(ctx, &ctx.d1, &ctx.x1_pow(2 * k + 1));
    bracket -= mul(ctx, &ctx.d2, &ctx.x1_pow(2 * j + 3));
    bracket -= Scalar::with_val(prec, ctx.d1.square_ref()) * ctx.x1_pow(2 * j + 2 * k + 4);
    let head = mul(ctx, &ctx.d2, &ctx.x2) + ctx.x1_pow(2);
    let den = Scalar::with_val(prec, (&ctx.gap).pow(3u32));
    bracket * head * lambda_sq_minus_one(ctx) * ctx.x2_pow(j + k + 1) / den
}

/// `φ_{(k,k,k)} - φ_{(k,k+1,k-1)}` in family `P` with `e = 7`:
/// `(d₂x₁+1)(λ²-1)²(d₂²x₂^k - d₁²x₁^k)/(x₂-x₁)²`.
pub fn e7_shift_difference(ctx: &TransferParams, k: usize) -> Scalar {
    let k = k as i64;
    let prec = ctx.prec();
    let inner = Scalar::with_val(prec, ctx.d2.square_ref()) * ctx.x2_pow(k)
        - Scalar::with_val(prec, ctx.d1.square_ref()) * ctx.x1_pow(k);
    let l = lambda_sq_minus_one(ctx);
    let head = mul(ctx, &ctx.d2, &ctx.x1) + 1u32;
    inner * head * Scalar::with_val(prec, l.square_ref()) / Scalar::with_val(prec, ctx.gap.square_ref())
}

/// `φ_{(k,k+1,k,k)} - φ_{(k,k+1,k+1,k-1)}` in family `P` with `e = 8`:
/// `(d₂x₁+1)(λ²-1)²x₂^{2k+1}/(x₂-x₁)³ · (d₂³ - 2d₁d₂x₁^{2k+1} - d₁³x₁^{4k+2})`.
pub fn e8_middle_shift_difference(ctx: &TransferParams, k: usize) -> Scalar {
    let k = k as i64;
    let prec = ctx.prec();
    let d1d2 = mul(ctx, &ctx.d1, &ctx.d2);
    let mut inner = Scalar::with_val(prec, (&ctx.d2).pow(3u32));
    inner -= d1d2 * ctx.x1_pow(2 * k + 1) * 2u32;
    inner -= Scalar::with_val(prec, (&ctx.d1).pow(3u32)) * ctx.x1_pow(4 * k + 2);
    let l = lambda_sq_minus_one(ctx);
    let head = mul(ctx, &ctx.d2, &ctx.x1) + 1u32;
    let den = Scalar::with_val(prec, (&ctx.gap).pow(3u32));
    inner * head * Scalar::with_val(prec, l.square_ref()) * ctx.x2_pow(2 * k + 1) / den
}

/// `φ_{(k,k,k+1,k-1)} - φ_{(k,k+1,k,k-1)}` in family `P` with `e = 8`, as
/// the shift identity `(x₁-x₂)(p^{(k)}q^{(k-1)} - q^{(k)}p^{(k-1)})` with the
/// explicit pairs of the path-with-two-leaves blocks. It reduces to
/// `d₁d₂λ²(λ²-1)²`, independent of `k`.
pub fn e8_tie_shift_difference(ctx: &TransferParams, k: usize) -> Scalar {
    let k = k as i64;
    let prec = ctx.prec();
    let l = lambda_sq_minus_one(ctx);
    let scale = Scalar::with_val(prec, &l / Scalar::with_val(prec, ctx.gap.square_ref()));
    let d1sq = Scalar::with_val(prec, ctx.d1.square_ref());
    let d2sq = Scalar::with_val(prec, ctx.d2.square_ref());
    let p_of = |m: i64| -> Scalar {
        (Scalar::with_val(prec, &d1sq * ctx.x1_pow(m + 1)) + Scalar::with_val(prec, &ctx.d2 * ctx.x2_pow(m)))
            * &scale
    };
    let q_of = |m: i64| -> Scalar {
        (Scalar::with_val(prec, &d2sq * ctx.x2_pow(m + 1)) - Scalar::with_val(prec, &ctx.d1 * ctx.x1_pow(m)))
            * &scale
    };
    let cross = p_of(k) * q_of(k - 1) - q_of(k) * p_of(k - 1);
    -cross * &ctx.gap
}

/// `(1/(x₂-x₁))[[d₁x₁^k, 1], [-1, d₂x₂^k]]`, equal to `A^l B A^{l+1}` for
/// odd `k = 2l + 1`.
pub fn balanced_block_matrix(ctx: &TransferParams, k: usize) -> Mat2 {
    let k = k as i64;
    let prec = ctx.prec();
    let s = |v: Scalar| v / &ctx.gap;
    [
        [s(mul(ctx, &ctx.d1, &ctx.x1_pow(k))), s(ctx.scalar(1))],
        [s(ctx.scalar(-1)), s(mul(ctx, &ctx.d2, &ctx.x2_pow(k)))],
    ]
    .map(|row| row.map(|v| Scalar::with_val(prec, v)))
}
