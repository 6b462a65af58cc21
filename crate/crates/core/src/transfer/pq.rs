use std::sync::Arc;

use serde::Serialize;

use crate::charpoly::CharpolyMemo;
use crate::graph::Tree;
use crate::scalar::{to_decimal_full, Scalar};

use super::{make_params, TransferError, TransferParams};

/// The split of `(φ_G, φ_{G-v})` over the `(x₁, x₂)` basis:
/// `φ_G = p + q` and `φ_{G-v} = x₂p + x₁q`.
#[derive(Clone, Debug)]
pub struct PQPair {
    pub p: Scalar,
    pub q: Scalar,
    pub context: Arc<TransferParams>,
}

/// The three extension steps of the transfer calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// New root joined to the old root.
    A,
    /// New root carrying a pendant leaf.
    B,
    /// New root carrying a pendant `P₂`.
    C,
}

impl Step {
    /// Step for a new root carrying a pendant path of `len` vertices, if one
    /// of the three matrices covers it.
    pub fn for_pendant(len: usize) -> Option<Step> {
        match len {
            0 => Some(Step::A),
            1 => Some(Step::B),
            2 => Some(Step::C),
            _ => None,
        }
    }

    pub fn matrix(self, ctx: &TransferParams) -> Mat2 {
        let prec = ctx.prec();
        let z = || Scalar::new(prec);
        match self {
            Step::A => [[ctx.x1.clone(), z()], [z(), ctx.x2.clone()]],
            Step::B => {
                let s = |v: Scalar| v / &ctx.gap;
                [
                    [s(ctx.d1.clone()), s(ctx.x1.clone())],
                    [s(-ctx.x2.clone()), s(ctx.d2.clone())],
                ]
            }
            Step::C => {
                let l2m1 = Scalar::with_val(prec, ctx.lambda.square_ref()) - 1;
                let s = |v: Scalar| v / &ctx.gap;
                let a = Scalar::with_val(prec, &l2m1 - ctx.x1_pow(4));
                let b = Scalar::with_val(prec, &ctx.lambda * &ctx.x1);
                let c = -Scalar::with_val(prec, &ctx.lambda * &ctx.x2);
                let d = ctx.x2_pow(4) - l2m1;
                [[s(a), s(b)], [s(c), s(d)]]
            }
        }
    }
}

pub type Mat2 = [[Scalar; 2]; 2];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let prec = a[0][0].prec();
    let entry = |i: usize, j: usize| {
        Scalar::with_val(prec, &a[i][0] * &b[0][j]) + Scalar::with_val(prec, &a[i][1] * &b[1][j])
    };
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

impl PQPair {
    /// Inverts the basis change: `p = (φ_{G-v} - x₁φ_G)/(x₂-x₁)`,
    /// `q = (x₂φ_G - φ_{G-v})/(x₂-x₁)`.
    pub fn from_phi(ctx: &Arc<TransferParams>, phi: &Scalar, phi_minus_v: &Scalar) -> PQPair {
        let prec = ctx.prec();
        let p = (Scalar::with_val(prec, phi_minus_v) - Scalar::with_val(prec, &ctx.x1 * phi)) / &ctx.gap;
        let q = (Scalar::with_val(prec, &ctx.x2 * phi) - phi_minus_v) / &ctx.gap;
        PQPair {
            p,
            q,
            context: ctx.clone(),
        }
    }

    /// The pair of the empty rooted graph, `(φ, φ_{-v}) = (1, 0)`. One `A`
    /// step turns it into a single vertex.
    pub fn empty(ctx: &Arc<TransferParams>) -> PQPair {
        Self::from_phi(ctx, &ctx.scalar(1), &ctx.scalar(0))
    }

    pub fn phi(&self) -> Scalar {
        Scalar::with_val(self.context.prec(), &self.p + &self.q)
    }

    pub fn phi_minus_root(&self) -> Scalar {
        let prec = self.context.prec();
        Scalar::with_val(prec, &self.context.x2 * &self.p) + Scalar::with_val(prec, &self.context.x1 * &self.q)
    }

    /// The ratio `t = q/p`.
    pub fn ratio(&self) -> Result<Scalar, TransferError> {
        if self.p.is_zero() {
            return Err(TransferError::ZeroDenominator);
        }
        Ok(Scalar::with_val(self.context.prec(), &self.q / &self.p))
    }

    fn check(&self, other: &PQPair) -> Result<(), TransferError> {
        if Arc::ptr_eq(&self.context, &other.context) || self.context.same_lambda(&other.context) {
            Ok(())
        } else {
            Err(TransferError::ContextMismatch)
        }
    }

    pub fn apply_matrix(&self, m: &Mat2) -> PQPair {
        let prec = self.context.prec();
        let p = Scalar::with_val(prec, &m[0][0] * &self.p) + Scalar::with_val(prec, &m[0][1] * &self.q);
        let q = Scalar::with_val(prec, &m[1][0] * &self.p) + Scalar::with_val(prec, &m[1][1] * &self.q);
        PQPair {
            p,
            q,
            context: self.context.clone(),
        }
    }

    pub fn apply(&self, step: Step) -> PQPair {
        match step {
            Step::A => {
                let prec = self.context.prec();
                PQPair {
                    p: Scalar::with_val(prec, &self.p * &self.context.x1),
                    q: Scalar::with_val(prec, &self.q * &self.context.x2),
                    context: self.context.clone(),
                }
            }
            _ => self.apply_matrix(&step.matrix(&self.context)),
        }
    }

    /// `A^k` applied in one go.
    pub fn advance(&self, k: usize) -> PQPair {
        let prec = self.context.prec();
        let k = k as i64;
        PQPair {
            p: Scalar::with_val(prec, &self.p * self.context.x1_pow(k)),
            q: Scalar::with_val(prec, &self.q * self.context.x2_pow(k)),
            context: self.context.clone(),
        }
    }

    /// New root joined to the old root and carrying a pendant path of `len`
    /// vertices. Lengths 0, 1, 2 are the `A`, `B`, `C` steps.
    pub fn extend_with_pendant(&self, len: usize) -> PQPair {
        if let Some(step) = Step::for_pendant(len) {
            return self.apply(step);
        }
        let ctx = &self.context;
        let prec = ctx.prec();
        let phi_h = self.phi();
        let phi_h_minus = self.phi_minus_root();
        let pm = ctx.phi_path(len);
        let pm_minus = ctx.phi_path(len - 1);
        // expand the two cut edges at the new root
        let mut phi = Scalar::with_val(prec, &ctx.lambda * &phi_h) * &pm;
        phi -= Scalar::with_val(prec, &phi_h_minus * &pm);
        phi -= Scalar::with_val(prec, &phi_h * &pm_minus);
        let phi_minus = Scalar::with_val(prec, &phi_h * &pm);
        PQPair::from_phi(ctx, &phi, &phi_minus)
    }
}

impl Serialize for PQPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PQPair", 3)?;
        st.serialize_field("lambda", &to_decimal_full(&self.context.lambda))?;
        st.serialize_field("p", &to_decimal_full(&self.p))?;
        st.serialize_field("q", &to_decimal_full(&self.q))?;
        st.end()
    }
}

/// The pair of `(tree, v)` from the exact characteristic polynomials.
pub fn pq_of_rooted(tree: &Tree, v: usize, lambda: &Scalar) -> Result<PQPair, TransferError> {
    let ctx = make_params(lambda)?;
    Ok(pq_of_rooted_in(&ctx, tree, v))
}

pub fn pq_of_rooted_in(ctx: &Arc<TransferParams>, tree: &Tree, v: usize) -> PQPair {
    let (phi, phi_minus) = CharpolyMemo::new().rooted(tree, v);
    PQPair::from_phi(ctx, &phi.eval(&ctx.lambda), &phi_minus.eval(&ctx.lambda))
}

pub fn apply_step(pq: &PQPair, step: Step) -> PQPair {
    pq.apply(step)
}

/// `φ` of the two rooted graphs joined through one new middle vertex:
/// `(x₂-x₁)(q_L q_R - p_L p_R)`.
pub fn phi_join(left: &PQPair, right: &PQPair) -> Result<Scalar, TransferError> {
    phi_join_path(left, right, 1)
}

/// `φ` of the two rooted graphs joined by a path with `k` interior
/// vertices; `k = 0` joins the roots by an edge.
pub fn phi_join_path(left: &PQPair, right: &PQPair, k: usize) -> Result<Scalar, TransferError> {
    left.check(right)?;
    let ctx = &left.context;
    let prec = ctx.prec();
    let e = k as i64 - 1;
    let qq = Scalar::with_val(prec, &left.q * &right.q) * ctx.x2_pow(e);
    let pp = Scalar::with_val(prec, &left.p * &right.p) * ctx.x1_pow(e);
    Ok((qq - pp) * &ctx.gap)
}

/// `φ_{G_{i,j}} - φ_{G_{i+1,j-1}}`, where `G_{i,j}` runs `H₁`, `i` path
/// vertices, a vertex carrying a pendant leaf, `j` path vertices, `H₂`.
pub fn shift_difference(left: &PQPair, right: &PQPair, i: usize, j: usize) -> Result<Scalar, TransferError> {
    left.check(right)?;
    if j == 0 {
        return Err(TransferError::InvalidShift { i, j });
    }
    let ctx = &left.context;
    let prec = ctx.prec();
    let e = j as i64 - i as i64 - 1;
    let a = Scalar::with_val(prec, &left.p * &right.q) * ctx.x2_pow(e);
    let b = Scalar::with_val(prec, &left.q * &right.p) * ctx.x1_pow(e);
    Ok(-(a - b) * &ctx.gap)
}
