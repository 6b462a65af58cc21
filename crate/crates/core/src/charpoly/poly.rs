use std::fmt;

use rug::{Assign, Integer};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::Scalar;

/// Polynomial in λ with exact integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![Integer::from(c)])
    }

    /// The polynomial `λ`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Integer::new(), Integer::from(1)])
    }

    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> Integer {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Integer {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Integer::new(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Integer::new(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Self::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Integer::new(); self.coeffs.len() + other.coeffs.len() - 1];
        let mut tmp = Integer::new();
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                tmp.assign(a * b);
                out[i + j] += &tmp;
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiplication by `λ`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Integer::new());
        out.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs: out }
    }

    /// Horner evaluation at the precision of `x`.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::new(x.prec());
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Value and first derivative at `x`.
    pub fn eval_with_derivative(&self, x: &Scalar) -> (Scalar, Scalar) {
        let mut val = Scalar::new(x.prec());
        let mut der = Scalar::new(x.prec());
        for c in self.coeffs.iter().rev() {
            der *= x;
            der += &val;
            val *= x;
            val += c;
        }
        (val, der)
    }

    /// Exact value at an integer point.
    pub fn eval_integer(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Quotient by the monic divisor `λ - r` for a real `r`, returning the
    /// quotient coefficients (as reals) and the remainder.
    pub fn deflate(&self, r: &Scalar) -> (Vec<Scalar>, Scalar) {
        let prec = r.prec();
        let mut quotient = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut carry = Scalar::new(prec);
        for c in self.coeffs.iter().rev() {
            let mut next = Scalar::with_val(prec, &carry * r);
            next += c;
            quotient.push(carry);
            carry = next;
        }
        // quotient currently holds a leading zero placeholder followed by
        // the high-to-low coefficients
        quotient.remove(0);
        quotient.reverse();
        (quotient, carry)
    }
}

impl fmt::Display for IntPolynomial {
    /// Human form such as `λ^4 - 3λ^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let abs = Integer::from(c.abs_ref());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if abs != 1 || j == 0 {
                write!(f, "{abs}")?;
            }
            match j {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{j}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| Integer::from_str_radix(s, 10).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Precision;

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64s(&[-1, 0, 1]).to_string(), "λ^2 - 1");
        assert_eq!(IntPolynomial::from_i64s(&[0, 0, -3, 0, 1]).to_string(), "λ^4 - 3λ^2");
        assert_eq!(IntPolynomial::x().to_string(), "λ");
        assert_eq!(IntPolynomial::from_i64s(&[2, -1]).to_string(), "-λ + 2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::from_i64s(&[1, 1]);
        let b = IntPolynomial::from_i64s(&[-1, 1]);
        assert_eq!(a.mul(&b), IntPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(a.sub(&a), IntPolynomial::zero());
        assert_eq!(a.shift(), IntPolynomial::from_i64s(&[0, 1, 1]));
    }

    #[test]
    fn horner() {
        let p = Precision::default();
        let x = p.ratio(5, 2);
        let q = IntPolynomial::from_i64s(&[-1, 0, 1]);
        assert_eq!(q.eval(&x), 5.25);
        let p5 = IntPolynomial::from_i64s(&[0, 3, 0, -4, 0, 1]);
        assert_eq!(p5.eval(&x), 42.65625);
        let (v, d) = q.eval_with_derivative(&x);
        assert_eq!(v, 5.25);
        assert_eq!(d, 5);
    }

    #[test]
    fn deflation() {
        let p = Precision::default();
        // (λ - 2)(λ + 3) = λ^2 + λ - 6
        let q = IntPolynomial::from_i64s(&[-6, 1, 1]);
        let (quot, rem) = q.deflate(&p.from_i64(2));
        assert_eq!(rem, 0);
        assert_eq!(quot.len(), 2);
        assert_eq!(quot[0], 3);
        assert_eq!(quot[1], 1);
    }

    #[test]
    fn json_round_trip() {
        let q = IntPolynomial::from_i64s(&[-1, 0, 1]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"["-1","0","1"]"#);
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }
}
