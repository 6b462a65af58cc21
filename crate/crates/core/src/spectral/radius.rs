use serde::Serialize;
use serde_json::json;

use crate::charpoly::{charpoly_det_oracle, charpoly_forest, CharpolyMemo, IntPolynomial};
use crate::graph::{Graph, Tree};
use crate::scalar::{to_decimal, to_decimal_full, Precision, Scalar};

use super::eval::GuardedPoly;
use super::SpectralError;

/// Working precision and target enclosure width for root solves.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    pub precision: Precision,
    pub tol: f64,
}

pub const DEFAULT_TOL: f64 = 1e-40;

/// Radii closer than this are treated as equal.
pub const TIE_TOL: f64 = 1e-30;

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            precision: Precision::default(),
            tol: DEFAULT_TOL,
        }
    }
}

impl SolveOptions {
    pub fn new(precision: Precision, tol: f64) -> Self {
        SolveOptions { precision, tol }
    }

    pub fn check(&self) -> Result<(), SpectralError> {
        let min = self.precision.min_tolerance();
        if self.tol.is_nan() || self.tol <= 0.0 || self.tol < min {
            return Err(SpectralError::ToleranceUnachievable {
                tol: self.tol,
                digits: self.precision.decimal_digits(),
            });
        }
        Ok(())
    }
}

/// A root with its final enclosure.
#[derive(Clone, Debug)]
pub struct SpectralResult {
    pub value: Scalar,
    pub lo: Scalar,
    pub hi: Scalar,
    pub residual: Scalar,
    pub iterations: usize,
}

impl SpectralResult {
    pub fn width(&self) -> Scalar {
        Scalar::with_val(self.value.prec(), &self.hi - &self.lo)
    }

    /// JSON object with scalars at `digits` significant digits, or at full
    /// precision when `digits` is `None`.
    pub fn to_json(&self, digits: Option<usize>) -> serde_json::Value {
        let f = |x: &Scalar| match digits {
            Some(d) => to_decimal(x, d),
            None => to_decimal_full(x),
        };
        json!({
            "value": f(&self.value),
            "lo": f(&self.lo),
            "hi": f(&self.hi),
            "residual": to_decimal(&self.residual, 6),
            "iterations": self.iterations,
        })
    }
}

impl Serialize for SpectralResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json(None).serialize(s)
    }
}

/// Collatz–Wielandt bounds on the spectral radius of a connected graph,
/// from power iteration on `A + I` in double precision.
pub fn collatz_wielandt(graph: &Graph, max_iter: usize) -> (f64, f64) {
    let n = graph.n();
    if n == 1 {
        return (0.0, 0.0);
    }
    let mut x = vec![1.0f64; n];
    let mut lo = 0.0;
    let mut hi = f64::INFINITY;
    for _ in 0..max_iter {
        let y: Vec<f64> = (0..n)
            .map(|v| x[v] + graph.neighbors(v).iter().map(|&w| x[w]).sum::<f64>())
            .collect();
        let mut rmin = f64::INFINITY;
        let mut rmax = 0.0f64;
        for v in 0..n {
            let r = y[v] / x[v];
            rmin = rmin.min(r);
            rmax = rmax.max(r);
        }
        lo = f64::max(lo, rmin - 1.0);
        hi = f64::min(hi, rmax - 1.0);
        let norm = y.iter().cloned().fold(0.0, f64::max);
        x = y.into_iter().map(|v| v / norm).collect();
        if hi - lo < 1e-13 * hi.max(1.0) {
            break;
        }
    }
    (lo, hi)
}

/// Largest real root of a real-rooted polynomial, given a double-precision
/// approximation `upper` of an upper bound.
///
/// The upper bound is first certified by positivity of the Taylor
/// coefficients at it. Newton's method from the right then decreases
/// monotonically to the root, and bisection closes the enclosure.
pub fn largest_root(poly: &IntPolynomial, upper: f64, opts: &SolveOptions) -> Result<SpectralResult, SpectralError> {
    opts.check()?;
    let prec = opts.precision.bits();
    let tol = opts.precision.from_f64(opts.tol);
    let guarded = GuardedPoly::new(poly, prec, upper.abs() + 1.0);

    let mut margin = 1e-9 * upper.abs().max(1.0);
    let mut hi = Scalar::with_val(prec, upper + margin);
    while !guarded.bounds_all_roots(&hi) {
        margin *= 4.0;
        hi = Scalar::with_val(prec, upper + margin);
        if margin > 1e6 {
            return Err(SpectralError::Localization);
        }
    }

    let mut iterations = 0;
    let mut x = hi.clone();
    let quarter = Scalar::with_val(prec, &tol / 4u32);
    loop {
        iterations += 1;
        let (v, d) = guarded.eval_with_derivative(&x);
        if v.is_zero() || d <= 0 {
            break;
        }
        let step = Scalar::with_val(prec, &v / &d);
        x -= &step;
        if step <= quarter || iterations > 100_000 {
            break;
        }
    }

    // enclosure φ(lo) < 0 < φ(hi) around the Newton limit, kept a quarter
    // tolerance away so the signs are not decided by rounding noise
    let mut delta = quarter.clone();
    let mut hi;
    loop {
        hi = Scalar::with_val(prec, &x + &delta);
        if guarded.eval(&hi) > 0 {
            break;
        }
        delta *= 2u32;
        iterations += 1;
    }
    let mut delta = quarter.clone();
    let mut lo;
    loop {
        lo = Scalar::with_val(prec, &x - &delta);
        if guarded.eval(&lo) < 0 {
            break;
        }
        delta *= 2u32;
        iterations += 1;
        if iterations > 200_000 {
            return Err(SpectralError::Localization);
        }
    }
    loop {
        let width = Scalar::with_val(prec, &hi - &lo);
        if width <= tol {
            break;
        }
        iterations += 1;
        let mid = Scalar::with_val(prec, &lo + &hi) / 2u32;
        if guarded.eval(&mid) < 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let value = Scalar::with_val(prec, &lo + &hi) / 2u32;
    let residual = guarded.eval(&value).abs();
    Ok(SpectralResult {
        value,
        lo,
        hi,
        residual,
        iterations,
    })
}

/// Spectral radius of a tree: the largest root of its characteristic
/// polynomial.
pub fn rho_tree(tree: &Tree, opts: &SolveOptions) -> Result<SpectralResult, SpectralError> {
    let poly = CharpolyMemo::new().charpoly(tree);
    rho_tree_with(tree, &poly, opts)
}

/// As [`rho_tree`] with the characteristic polynomial supplied.
pub fn rho_tree_with(tree: &Tree, poly: &IntPolynomial, opts: &SolveOptions) -> Result<SpectralResult, SpectralError> {
    let (_, hi) = collatz_wielandt(tree.graph(), 4000);
    largest_root(poly, hi, opts)
}

/// Spectral radius of any connected graph. Trees use the deletion
/// recurrences; graphs with cycles use the determinant oracle.
pub fn rho_graph(graph: &Graph, opts: &SolveOptions) -> Result<SpectralResult, SpectralError> {
    if !graph.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let poly = if graph.is_forest() {
        charpoly_forest(graph)?
    } else {
        charpoly_det_oracle(graph)?
    };
    let (_, hi) = collatz_wielandt(graph, 4000);
    largest_root(&poly, hi, opts)
}

/// Largest spectral radius among the components of a forest.
pub fn rho_forest(graph: &Graph, opts: &SolveOptions) -> Result<SpectralResult, SpectralError> {
    let mut best: Option<SpectralResult> = None;
    for comp in graph.components() {
        let sub = graph.induced(&comp);
        let r = rho_graph(&sub, opts)?;
        if best.as_ref().is_none_or(|b| r.value > b.value) {
            best = Some(r);
        }
    }
    best.ok_or(SpectralError::Empty)
}

/// True iff `x > ρ(tree)`, i.e. `xI - A` is positive definite. Eliminating
/// leaves first keeps the factorization sparse: each pivot is `x` minus the
/// reciprocals of the children's pivots, and all must be positive.
pub fn exceeds_radius(tree: &Tree, x: &Scalar) -> bool {
    let n = tree.n();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in tree.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let prec = x.prec();
    let mut pivot: Vec<Scalar> = (0..n).map(|_| x.clone()).collect();
    for &v in order.iter().rev() {
        if pivot[v] <= 0 {
            return false;
        }
        let p = parent[v];
        if p != usize::MAX {
            let r = Scalar::with_val(prec, pivot[v].recip_ref());
            pivot[p] -= r;
        }
    }
    true
}

/// Second largest root `λ₂` of a tree's characteristic polynomial (with
/// multiplicity, so it equals `ρ` only if `ρ` were repeated).
pub fn second_largest_root(tree: &Tree, opts: &SolveOptions) -> Result<Scalar, SpectralError> {
    if tree.n() < 2 {
        return Err(SpectralError::Empty);
    }
    let poly = CharpolyMemo::new().charpoly(tree);
    // deflate at a higher precision so the quotient is accurate
    let inner = SolveOptions::new(
        Precision::digits(opts.precision.decimal_digits() + 40),
        opts.tol.min(1e-60),
    );
    let rho = rho_tree_with(tree, &poly, &inner)?.value;
    let guarded = GuardedPoly::new(&poly, inner.precision.bits(), rho.to_f64() + 1.0);
    let work = guarded.work;
    let (quotient, _) = poly.deflate(&Scalar::with_val(work, &rho));
    let prec = opts.precision.bits();
    let tol = Scalar::with_val(work, opts.tol / 10.0);
    let mut x = Scalar::with_val(work, &rho);
    for _ in 0..200_000 {
        let mut v = Scalar::new(work);
        let mut d = Scalar::new(work);
        for c in quotient.iter().rev() {
            d *= &x;
            d += &v;
            v *= &x;
            v += c;
        }
        if v <= 0 || d <= 0 {
            break;
        }
        let step = Scalar::with_val(work, &v / &d);
        x -= &step;
        if step < tol {
            break;
        }
    }
    Ok(Scalar::with_val(prec, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_quipu, QuipuSpec};

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    #[test]
    fn path_radii() {
        for n in 2..30 {
            let r = rho_tree(&Tree::path(n), &opts()).unwrap();
            let expect = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((r.value.to_f64() - expect).abs() < 1e-14, "n={n}");
            assert!(r.width() <= 1e-40);
        }
        let p = Precision::default();
        let golden = (p.from_i64(5).sqrt() + 1u32) / 2u32;
        let r = rho_tree(&Tree::path(4), &opts()).unwrap();
        assert!(Scalar::with_val(400, &r.value - golden).abs() < 1e-40);
    }

    #[test]
    fn stars_and_single_vertex() {
        let r = rho_tree(&Tree::star(9), &opts()).unwrap();
        assert!(Scalar::with_val(400, &r.value - 3u32).abs() < 1e-40);
        let r = rho_tree(&Tree::path(1), &opts()).unwrap();
        assert!(r.value.clone().abs() < 1e-40);
    }

    #[test]
    fn pendant_at_one_stays_below_two() {
        let mut prev = 0.0;
        for n in 5..40 {
            let t = build_quipu(&QuipuSpec::new(n - 1, vec![(1, 1)]).unwrap()).unwrap();
            let r = rho_tree(&t, &opts()).unwrap().value.to_f64();
            assert!(r < 2.0 && r > prev);
            prev = r;
        }
    }

    #[test]
    fn enclosure_signs() {
        let t = build_quipu(&QuipuSpec::new(20, vec![(2, 2), (7, 1), (12, 2)]).unwrap()).unwrap();
        let poly = crate::charpoly::charpoly_tree(&t);
        let r = rho_tree(&t, &opts()).unwrap();
        assert!(poly.eval(&r.lo) < 0);
        assert!(poly.eval(&r.hi) > 0);
    }

    #[test]
    fn tolerance_limits() {
        let o = SolveOptions::new(Precision::digits(30), 1e-20);
        assert!(matches!(
            rho_tree(&Tree::path(4), &o),
            Err(SpectralError::ToleranceUnachievable { .. })
        ));
        assert!(rho_tree(&Tree::path(4), &SolveOptions::new(Precision::digits(30), 1e-10)).is_ok());
    }

    #[test]
    fn second_root_of_small_trees() {
        // P4: 2cos(2π/5) = (√5 - 1)/2
        let l2 = second_largest_root(&Tree::path(4), &opts()).unwrap();
        assert!((l2.to_f64() - 0.6180339887498949).abs() < 1e-14);
        // K_{1,3}: spectrum ±√3, 0, 0
        let l2 = second_largest_root(&Tree::star(3), &opts()).unwrap();
        assert!(l2.to_f64().abs() < 1e-20);
    }

    #[test]
    fn cyclic_graphs_through_the_oracle() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = rho_graph(&c5, &opts()).unwrap();
        assert!((r.value.to_f64() - 2.0).abs() < 1e-30);
    }

    #[test]
    fn pivot_test_brackets_radius() {
        let opts = SolveOptions::default();
        for t in [Tree::path(7), Tree::star(5), crate::graph::build_quipu(&crate::graph::QuipuSpec::new(9, vec![(2, 2), (5, 1)]).unwrap()).unwrap()] {
            let rho = rho_tree(&t, &opts).unwrap();
            let above = Scalar::with_val(rho.hi.prec(), &rho.hi + 1e-30);
            let below = Scalar::with_val(rho.lo.prec(), &rho.lo - 1e-30);
            assert!(exceeds_radius(&t, &above));
            assert!(!exceeds_radius(&t, &below));
        }
    }
}
