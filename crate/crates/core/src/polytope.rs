//! Lattice polytopes in exponent space: Newton polytopes, Minkowski sums,
//! exact membership and containment via rational LP feasibility.

use crate::coeff::Coeff;
use crate::poly::LaurentPolynomial;
use crate::rational::RationalExpression;
use crate::simplex::{big, solve_feasible};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

/// One-parameter subgroup direction in exponent space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Direction {
    pub s: Vec<i64>,
}

/// Convex hull of a finite set of lattice points. The empty polytope (no
/// generators) is a distinct value from the single point at the origin.
#[derive(Debug)]
pub struct ConvexPolytope {
    dim: usize,
    generators: Vec<Vec<i64>>,
    vertices: OnceLock<Vec<Vec<i64>>>,
}

impl Clone for ConvexPolytope {
    fn clone(&self) -> Self {
        ConvexPolytope {
            dim: self.dim,
            generators: self.generators.clone(),
            vertices: OnceLock::new(),
        }
    }
}

impl PartialEq for ConvexPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices() == other.vertices()
    }
}
impl Eq for ConvexPolytope {}

impl ConvexPolytope {
    pub fn empty(dim: usize) -> Self {
        Self::from_points(dim, Vec::new())
    }

    pub fn from_points(dim: usize, mut points: Vec<Vec<i64>>) -> Self {
        for p in &points {
            assert_eq!(p.len(), dim, "point dimension mismatch");
        }
        points.sort();
        points.dedup();
        ConvexPolytope {
            dim,
            generators: points,
            vertices: OnceLock::new(),
        }
    }

    /// Newton polytope of a Laurent polynomial (y treated as a constant).
    pub fn newton<C: Coeff>(p: &LaurentPolynomial<C>) -> Self {
        Self::from_points(p.table().arity(), p.support())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Generators that are not convex combinations of the others,
    /// in sorted order.
    pub fn vertices(&self) -> &[Vec<i64>] {
        self.vertices.get_or_init(|| {
            self.generators
                .iter()
                .filter(|g| {
                    let others: Vec<Vec<i64>> = self
                        .generators
                        .iter()
                        .filter(|h| h != g)
                        .cloned()
                        .collect();
                    !in_hull(&others, g)
                })
                .cloned()
                .collect()
        })
    }

    /// Exact membership test for a lattice point.
    pub fn member(&self, pt: &[i64]) -> bool {
        assert_eq!(pt.len(), self.dim, "point dimension mismatch");
        in_hull(&self.generators, pt)
    }

    /// True iff self is contained in `big` (generator membership suffices
    /// by convexity). The empty polytope is contained in everything.
    pub fn is_contained_in(&self, big: &ConvexPolytope) -> bool {
        assert_eq!(self.dim, big.dim, "polytope dimension mismatch");
        self.generators.iter().all(|g| big.member(g))
    }

    pub fn minkowski(&self, other: &ConvexPolytope) -> ConvexPolytope {
        assert_eq!(self.dim, other.dim, "polytope dimension mismatch");
        let mut pts = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        ConvexPolytope::from_points(self.dim, pts)
    }

    /// Image under the linear form pt -> s . pt, as a 1-dimensional polytope.
    pub fn project(&self, s: &[i64]) -> ConvexPolytope {
        assert_eq!(s.len(), self.dim, "direction dimension mismatch");
        let pts = self
            .generators
            .iter()
            .map(|g| vec![g.iter().zip(s).map(|(a, b)| a * b).sum()])
            .collect();
        ConvexPolytope::from_points(1, pts)
    }
}

fn in_hull(generators: &[Vec<i64>], pt: &[i64]) -> bool {
    if generators.is_empty() {
        return false;
    }
    let dim = pt.len();
    // Feasibility of: sum lambda_i g_i = pt, sum lambda_i = 1, lambda >= 0.
    let mut rows = Vec::with_capacity(dim + 1);
    for d in 0..dim {
        rows.push(generators.iter().map(|g| big(g[d])).collect());
    }
    rows.push(vec![big(1); generators.len()]);
    let mut b: Vec<BigRational> = pt.iter().map(|&v| big(v)).collect();
    b.push(big(1));
    solve_feasible(&rows, &b).is_some()
}

/// N-smallness: Newton polytope of the numerator inside that of the expanded
/// denominator. Well defined across presentations by the Cancellation Law.
pub fn is_n_small<C: Coeff>(h: &RationalExpression<C>) -> bool {
    let num = ConvexPolytope::newton(h.numerator());
    let den = ConvexPolytope::newton(&h.denominator_product());
    num.is_contained_in(&den)
}

/// Containment of `small` in `big` punctured at the origin: containment plus
/// origin not in `small`. Vacuously true for empty `small`.
pub fn punctured_containment(small: &ConvexPolytope, big_p: &ConvexPolytope) -> bool {
    let origin = vec![0i64; small.dim()];
    small.is_contained_in(big_p) && !small.member(&origin)
}

/// Positivity of a torus representation given by weight exponent vectors:
/// true iff the origin is outside their convex hull, in which case an
/// integer direction with all pairings strictly positive is returned.
pub fn is_positive(weights: &[Vec<i64>]) -> Option<Direction> {
    assert!(!weights.is_empty(), "positivity of an empty weight set");
    let dim = weights[0].len();
    // Find rational s with s . w >= 1 for every w; s free, so s = u - v.
    // Columns: u_0..u_{dim-1}, v_0..v_{dim-1}, one slack per weight.
    let cols = 2 * dim + weights.len();
    let mut rows = Vec::with_capacity(weights.len());
    for (i, w) in weights.iter().enumerate() {
        assert_eq!(w.len(), dim, "weight dimension mismatch");
        let mut row = vec![BigRational::zero(); cols];
        for d in 0..dim {
            row[d] = big(w[d]);
            row[dim + d] = big(-w[d]);
        }
        row[2 * dim + i] = big(-1);
        rows.push(row);
    }
    let b = vec![BigRational::one(); weights.len()];
    let x = solve_feasible(&rows, &b)?;
    let s_rat: Vec<BigRational> = (0..dim).map(|d| &x[d] - &x[dim + d]).collect();
    let mut lcm = BigInt::one();
    for r in &s_rat {
        lcm = lcm.lcm(r.denom());
    }
    let s = s_rat
        .iter()
        .map(|r| {
            (r.numer() * &lcm / r.denom())
                .to_i64()
                .expect("witness direction exceeds i64")
        })
        .collect::<Vec<_>>();
    debug_assert!(weights
        .iter()
        .all(|w| w.iter().zip(&s).map(|(a, b)| a * b).sum::<i64>() > 0));
    Some(Direction { s })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let p = ConvexPolytope::from_points(
            2,
            vec![vec![-1, 0], vec![1, 0], vec![0, 1], vec![0, -1]],
        );
        assert!(p.member(&[0, 0]));
        assert!(!p.member(&[1, 1]));
        // interior rational point is not testable on the lattice, but the
        // vertex itself is a member
        assert!(p.member(&[1, 0]));
    }

    #[test]
    fn origin_outside_shifted_hull() {
        // hull of the two weight vectors of a positive action on C^2
        let p = ConvexPolytope::from_points(2, vec![vec![1, 1], vec![3, -2]]);
        assert!(!p.member(&[0, 0]));
    }

    #[test]
    fn containment() {
        let small = ConvexPolytope::from_points(1, vec![vec![-1], vec![0]]);
        let big_p = ConvexPolytope::from_points(1, vec![vec![-2], vec![1]]);
        assert!(small.is_contained_in(&big_p));
        assert!(!big_p.is_contained_in(&small));
        assert!(small.is_contained_in(&small));
        assert!(ConvexPolytope::empty(1).is_contained_in(&small));
    }

    #[test]
    fn minkowski_sums() {
        // [-n,0] + [-m,0] = [-n-m,0]
        let a = ConvexPolytope::from_points(1, vec![vec![-3], vec![0]]);
        let b = ConvexPolytope::from_points(1, vec![vec![-2], vec![0]]);
        let s = a.minkowski(&b);
        assert_eq!(s.vertices(), &[vec![-5], vec![0]]);
        // P + {origin} = P
        let origin = ConvexPolytope::from_points(1, vec![vec![0]]);
        assert_eq!(a.minkowski(&origin), a);
    }

    #[test]
    fn vertices_drop_interior() {
        let p = ConvexPolytope::from_points(1, vec![vec![-1], vec![0], vec![1]]);
        assert_eq!(p.vertices(), &[vec![-1], vec![1]]);
    }

    #[test]
    fn positivity() {
        let w = is_positive(&[vec![1, 1], vec![3, -2]]).unwrap();
        assert!([vec![1, 1], vec![3, -2]]
            .iter()
            .all(|v| v.iter().zip(&w.s).map(|(a, b)| a * b).sum::<i64>() > 0));
        // s = (1,0) verifies positivity directly
        assert!([vec![1, 1], vec![3, -2]]
            .iter()
            .all(|v| v[0] > 0));
        assert!(is_positive(&[vec![1], vec![-1]]).is_none());
        assert!(is_positive(&[vec![1]]).is_some());
    }

    #[test]
    fn punctured() {
        let small = ConvexPolytope::from_points(1, vec![vec![-1], vec![1]]);
        assert!(!punctured_containment(&small, &small));
        let shifted = ConvexPolytope::from_points(1, vec![vec![-2], vec![-1]]);
        let big_p = ConvexPolytope::from_points(1, vec![vec![-3], vec![0]]);
        assert!(punctured_containment(&shifted, &big_p));
        assert!(punctured_containment(&ConvexPolytope::empty(1), &big_p));
    }
}
