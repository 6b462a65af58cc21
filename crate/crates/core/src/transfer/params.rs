use std::sync::Arc;

use rug::ops::Pow;

use crate::scalar::{to_decimal, Scalar};

use super::TransferError;

/// Scalar context at a fixed `λ > 2`: the roots `x₁ < 1 < x₂` of
/// `x² - λx + 1` and `d₁ = λ - x₁³`, `d₂ = x₂³ - λ`.
#[derive(Clone, Debug)]
pub struct TransferParams {
    pub lambda: Scalar,
    pub x1: Scalar,
    pub x2: Scalar,
    pub d1: Scalar,
    pub d2: Scalar,
    /// `x₂ - x₁ = √(λ² - 4)`.
    pub gap: Scalar,
}

impl TransferParams {
    pub fn prec(&self) -> u32 {
        self.lambda.prec()
    }

    pub fn scalar(&self, v: i64) -> Scalar {
        Scalar::with_val(self.prec(), v)
    }

    /// `x₁^e` for any real exponent; negative exponents give powers of `x₂`.
    pub fn x1_pow(&self, e: i64) -> Scalar {
        if e >= 0 {
            Scalar::with_val(self.prec(), (&self.x1).pow(e))
        } else {
            Scalar::with_val(self.prec(), (&self.x2).pow(-e))
        }
    }

    pub fn x2_pow(&self, e: i64) -> Scalar {
        self.x1_pow(-e)
    }

    pub fn x1_powf(&self, e: &Scalar) -> Scalar {
        Scalar::with_val(self.prec(), (&self.x1).pow(e))
    }

    pub fn x2_powf(&self, e: &Scalar) -> Scalar {
        Scalar::with_val(self.prec(), (&self.x2).pow(e))
    }

    /// `φ_{P_m}(λ) = (x₂^{m+1} - x₁^{m+1}) / (x₂ - x₁)`; `P_0` is the empty graph.
    pub fn phi_path(&self, m: usize) -> Scalar {
        let e = m as i64 + 1;
        let num = self.x2_pow(e) - self.x1_pow(e);
        num / &self.gap
    }

    /// `d₁x₂ - d₂x₁`, which equals 2.
    pub fn d_identity(&self) -> Scalar {
        Scalar::with_val(self.prec(), &self.d1 * &self.x2) - Scalar::with_val(self.prec(), &self.d2 * &self.x1)
    }

    pub fn same_lambda(&self, other: &TransferParams) -> bool {
        self.lambda == other.lambda
    }
}

/// Builds the context at `λ`. Requires `λ > 2` so that `x₁, x₂` are real
/// and distinct.
pub fn make_params(lambda: &Scalar) -> Result<Arc<TransferParams>, TransferError> {
    if !lambda.is_finite() || *lambda <= 2 {
        return Err(TransferError::OutOfDomain(to_decimal(lambda, 20)));
    }
    let prec = lambda.prec();
    let disc: Scalar = Scalar::with_val(prec, lambda.square_ref()) - 4;
    let gap = disc.sqrt();
    let x2: Scalar = Scalar::with_val(prec, lambda + &gap) / 2;
    let x1 = Scalar::with_val(prec, x2.recip_ref());
    let d1 = Scalar::with_val(prec, lambda - Scalar::with_val(prec, (&x1).pow(3)));
    let d2 = Scalar::with_val(prec, (&x2).pow(3)) - lambda;
    Ok(Arc::new(TransferParams {
        lambda: lambda.clone(),
        x1,
        x2,
        d1,
        d2,
        gap,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Precision;

    #[test]
    fn exact_rationals_at_five_halves() {
        let p = Precision::default();
        let ctx = make_params(&p.ratio(5, 2)).unwrap();
        assert_eq!(ctx.x1, 0.5);
        assert_eq!(ctx.x2, 2);
        assert_eq!(ctx.d1, 2.375);
        assert_eq!(ctx.d2, 5.5);
        assert_eq!(ctx.d_identity(), 2);
        assert_eq!(ctx.gap, 1.5);
    }

    #[test]
    fn domain() {
        let p = Precision::default();
        assert!(make_params(&p.from_i64(2)).is_err());
        assert!(make_params(&p.ratio(3, 2)).is_err());
    }

    #[test]
    fn path_values() {
        let p = Precision::default();
        let ctx = make_params(&p.ratio(5, 2)).unwrap();
        assert_eq!(ctx.phi_path(0), 1);
        assert_eq!(ctx.phi_path(1), 2.5);
        assert_eq!(ctx.phi_path(2), 5.25);
        assert_eq!(ctx.phi_path(3), 10.625);
    }
}
