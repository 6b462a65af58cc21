use crate::charpoly::IntPolynomial;
use crate::scalar::Scalar;

/// Extra bits needed so that Horner evaluation at `|x| ≤ bound` keeps the
/// requested absolute accuracy despite cancellation among large terms.
pub fn guard_bits(poly: &IntPolynomial, bound: f64) -> u32 {
    let mag: f64 = poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let bits = c.significant_bits() as f64;
            bits + j as f64 * bound.abs().max(1.0).log2()
        })
        .fold(0.0, f64::max);
    mag.ceil() as u32 + 8 + (poly.coeffs().len() as f64).log2().ceil() as u32
}

/// Polynomial evaluator that works internally at `prec + guard` bits.
pub struct GuardedPoly<'a> {
    pub poly: &'a IntPolynomial,
    pub prec: u32,
    pub work: u32,
}

impl<'a> GuardedPoly<'a> {
    pub fn new(poly: &'a IntPolynomial, prec: u32, bound: f64) -> Self {
        GuardedPoly {
            poly,
            prec,
            work: prec + guard_bits(poly, bound),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let xw = Scalar::with_val(self.work, x);
        Scalar::with_val(self.prec, self.poly.eval(&xw))
    }

    pub fn eval_with_derivative(&self, x: &Scalar) -> (Scalar, Scalar) {
        let xw = Scalar::with_val(self.work, x);
        let (v, d) = self.poly.eval_with_derivative(&xw);
        (Scalar::with_val(self.prec, v), Scalar::with_val(self.prec, d))
    }

    /// Coefficients of `poly(x + t)` in `t`, lowest first.
    pub fn taylor_shift(&self, x: &Scalar) -> Vec<Scalar> {
        let xw = Scalar::with_val(self.work, x);
        let mut c: Vec<Scalar> = self
            .poly
            .coeffs()
            .iter()
            .map(|v| Scalar::with_val(self.work, v))
            .collect();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = Scalar::with_val(self.work, &c[j + 1] * &xw);
                c[j] += t;
            }
        }
        c
    }

    /// True if every root of the polynomial is strictly below `x`.
    pub fn bounds_all_roots(&self, x: &Scalar) -> bool {
        self.taylor_shift(x).iter().all(|c| *c > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Precision;

    #[test]
    fn taylor_shift_of_square() {
        // (x+1)^2 - 1 at x = 1: (t+2)^2 - 1 = t^2 + 4t + 3
        let poly = IntPolynomial::from_i64s(&[0, 2, 1]);
        let g = GuardedPoly::new(&poly, 200, 2.0);
        let c = g.taylor_shift(&Precision::default().from_i64(1));
        assert_eq!(c[0], 3);
        assert_eq!(c[1], 4);
        assert_eq!(c[2], 1);
    }

    #[test]
    fn root_bound_certificate() {
        let poly = IntPolynomial::from_i64s(&[-1, 0, 1]);
        let g = GuardedPoly::new(&poly, 200, 2.0);
        let p = Precision::default();
        assert!(g.bounds_all_roots(&p.from_f64(1.01)));
        assert!(!g.bounds_all_roots(&p.from_f64(0.99)));
    }
}
