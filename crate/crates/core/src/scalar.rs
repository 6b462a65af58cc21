//! Extended-precision reals.
//!
//! Every numeric routine in the crate works on [`Scalar`] values created at a
//! single [`Precision`]. MPFR gives correctly rounded arithmetic at that
//! precision; the helpers here only deal with construction and formatting.

use std::fmt;

use rug::float::Round;
use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

pub type Scalar = Float;

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 100;

/// Guard bits added on top of the requested decimal digits.
const GUARD_BITS: u32 = 16;

/// Working precision, stated in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub fn digits(digits: u32) -> Self {
        Precision {
            digits: digits.max(1),
        }
    }

    pub fn decimal_digits(&self) -> u32 {
        self.digits
    }

    /// Binary precision handed to MPFR.
    pub fn bits(&self) -> u32 {
        (f64::from(self.digits) * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
    }

    pub fn zero(&self) -> Scalar {
        Float::new(self.bits())
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        Float::with_val(self.bits(), v)
    }

    pub fn from_f64(&self, v: f64) -> Scalar {
        Float::with_val(self.bits(), v)
    }

    pub fn from_integer(&self, v: &rug::Integer) -> Scalar {
        Float::with_val(self.bits(), v)
    }

    /// Exact-as-possible rational `num/den`.
    pub fn ratio(&self, num: i64, den: i64) -> Scalar {
        Float::with_val(self.bits(), num) / den
    }

    /// `10^exp`, correctly rounded.
    pub fn pow10(&self, exp: i32) -> Scalar {
        Float::with_val(self.bits(), 10).pow(exp)
    }

    /// Parses a decimal literal such as `"2.1"` or `"1e-40"`.
    pub fn parse(&self, text: &str) -> Option<Scalar> {
        Float::parse(text.trim())
            .ok()
            .map(|p| Float::with_val(self.bits(), p))
    }

    /// Smallest tolerance that root enclosures can honour at this precision.
    pub fn min_tolerance(&self) -> f64 {
        10f64.powi(-(self.digits.saturating_sub(20) as i32))
    }

    /// Relative spacing of representable values, i.e. `2^(1 - bits)`.
    pub fn epsilon(&self) -> Scalar {
        let one = self.from_i64(1);
        one >> (self.bits() - 1)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::digits(DEFAULT_DIGITS)
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} digits", self.digits)
    }
}

/// Decimal string with `digits` significant digits.
pub fn to_decimal(x: &Scalar, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let (neg, mantissa, exp) = x.to_sign_string_exp_round(10, Some(digits), Round::Nearest);
    let exp = exp.unwrap_or(0) as i64;
    let mantissa = mantissa.trim_end_matches('0');
    let mantissa = if mantissa.is_empty() { "0" } else { mantissa };
    let sign = if neg { "-" } else { "" };
    // value = 0.<mantissa> * 10^exp
    let len = mantissa.len() as i64;
    if exp > 0 && exp <= 60 {
        if exp >= len {
            let zeros = "0".repeat((exp - len) as usize);
            format!("{sign}{mantissa}{zeros}")
        } else {
            let (int, frac) = mantissa.split_at(exp as usize);
            format!("{sign}{int}.{frac}")
        }
    } else if exp <= 0 && exp > -6 {
        let zeros = "0".repeat((-exp) as usize);
        format!("{sign}0.{zeros}{mantissa}")
    } else {
        let (first, rest) = mantissa.split_at(1);
        let e = exp - 1;
        if rest.is_empty() {
            format!("{sign}{first}e{e}")
        } else {
            format!("{sign}{first}.{rest}e{e}")
        }
    }
}

/// Decimal string at the full working precision of `x`.
pub fn to_decimal_full(x: &Scalar) -> String {
    let digits = (f64::from(x.prec()) / std::f64::consts::LOG2_10).floor() as usize;
    to_decimal(x, digits)
}

/// `|a - b| < tie` with `tie` given as a power of ten.
pub fn within(a: &Scalar, b: &Scalar, tie: f64) -> bool {
    let diff = Float::with_val(a.prec().max(b.prec()), a - b).abs();
    diff < tie
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_formatting() {
        let p = Precision::default();
        assert_eq!(to_decimal(&p.ratio(21, 4), 20), "5.25");
        assert_eq!(to_decimal(&p.ratio(-1, 6), 5), "-0.16667");
        assert_eq!(to_decimal(&p.from_i64(42), 10), "42");
        assert_eq!(to_decimal(&p.pow10(-40), 10), "1e-40");
        assert_eq!(to_decimal(&p.zero(), 10), "0");
        assert_eq!(to_decimal(&p.ratio(1, 1000), 3), "0.001");
    }

    #[test]
    fn bits_cover_digits() {
        let p = Precision::digits(100);
        assert!(p.bits() >= 333);
        assert_eq!(p.min_tolerance(), 1e-80);
        let eps = p.epsilon();
        assert!(eps < 1e-100);
    }

    #[test]
    fn parse_literals() {
        let p = Precision::default();
        let x = p.parse("2.1").unwrap();
        assert!(within(&x, &p.ratio(21, 10), 1e-95));
        assert!(p.parse("nope").is_none());
    }
}
