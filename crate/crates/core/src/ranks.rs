//! Motivic Chern/Segre classes of A2 rank loci: the motivic expression
//! (sums of matrix weight functions), the sieve expression (q-weighted sums
//! of resolution classes), and their exact cross-validation.
//!
//! Everything internal is in the y convention; q-binomials are genuine
//! q-polynomials and are materialized through q = -y at the boundary.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::matrix::{matrix_table, weight_function_matrix, OrbitIndex};
use crate::poly::LaurentPolynomial;
use crate::psi::psi_factor;
use crate::rational::RationalExpression;
use crate::vars::VariableTable;
use crate::ypoly::YPoly;
use itertools::Itertools;
use std::cmp::Ordering;
use std::collections::HashMap;

/// The locus of maps C^k -> C^n with r-dimensional kernel.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RankLocus {
    pub k: usize,
    pub n: usize,
    pub r: usize,
}

impl RankLocus {
    pub fn new(k: usize, n: usize, r: usize) -> Self {
        assert!(r <= k && k <= n, "need r <= k <= n");
        RankLocus { k, n, r }
    }
}

/// Memoized Gaussian binomial coefficients, stored as polynomials in q with
/// nonnegative integer coefficients.
pub struct QBinomialTable<C: Coeff> {
    memo: HashMap<(usize, usize), YPoly<C>>,
}

impl<C: Coeff> Default for QBinomialTable<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> QBinomialTable<C> {
    pub fn new() -> Self {
        QBinomialTable { memo: HashMap::new() }
    }

    /// binom(a, r)_q via the recursion
    /// binom(a+1, r) = q^r binom(a, r) + binom(a, r-1); zero out of range.
    pub fn get(&mut self, a: usize, r: usize) -> YPoly<C> {
        if r > a {
            return YPoly::zero();
        }
        if r == 0 || r == a {
            return YPoly::one();
        }
        if let Some(v) = self.memo.get(&(a, r)) {
            return v.clone();
        }
        let v = &(&YPoly::monomial(C::one(), r) * &self.get(a - 1, r)) + &self.get(a - 1, r - 1);
        self.memo.insert((a, r), v.clone());
        v
    }
}

/// One-off q-binomial lookup.
pub fn q_binomial<C: Coeff>(a: usize, r: usize) -> YPoly<C> {
    QBinomialTable::new().get(a, r)
}

/// tau_y of the rank locus as the sum of matrix weight functions over all
/// subsets J with |J| = k - r.
pub fn tau_rank_motivic<C: Coeff>(loc: RankLocus) -> Result<LaurentPolynomial<C>> {
    let table = matrix_table(loc.k, loc.n);
    let mut sum = LaurentPolynomial::<C>::zero(&table);
    for j in (1..=loc.n).combinations(loc.k - loc.r) {
        sum = &sum + &weight_function_matrix(&OrbitIndex::new(loc.k, loc.n, j))?;
    }
    Ok(sum)
}

/// The denominator factors of lambda_y(T*V): each (1 + y a_u / b_v).
fn ambient_factors<C: Coeff>(k: usize, n: usize) -> Vec<LaurentPolynomial<C>> {
    let table = matrix_table(k, n);
    let mut out = Vec::with_capacity(k * n);
    for u in 1..=k {
        for v in 1..=n {
            out.push(psi_factor(&table, Ordering::Greater, u - 1, k + v - 1));
        }
    }
    out
}

/// Motivic Segre class: tau divided by lambda_y(T*V), denominator kept
/// factored.
pub fn segre_class<C: Coeff>(
    tau: LaurentPolynomial<C>,
    k: usize,
    n: usize,
) -> RationalExpression<C> {
    RationalExpression::new(tau, ambient_factors(k, n)).cancel()
}

/// The resolution class Phi^a_{k,n}: a fixed-point sum over a-subsets I of
/// {1..k}. With q = -y materialized, each term is
/// prod_{u in I, v} (1 - a_u/b_v)/(1 + y a_u/b_v)
/// * prod_{u in I, w not in I} (1 + y a_u/a_w)/(1 - a_u/a_w),
/// and the alpha-denominators must cancel across the sum.
pub fn phi_resolution<C: Coeff>(a: usize, k: usize, n: usize) -> Result<RationalExpression<C>> {
    assert!(a <= k && k <= n, "need a <= k <= n");
    let table = matrix_table(k, n);
    let va = |u: usize| u - 1;
    let vb = |v: usize| k + v - 1;
    let mut sum = RationalExpression::<C>::zero(&table);
    for i_set in (1..=k).combinations(a) {
        let mut num = LaurentPolynomial::<C>::one(&table);
        let mut den = Vec::new();
        for &u in &i_set {
            for v in 1..=n {
                num = &num * &psi_factor(&table, Ordering::Less, va(u), vb(v));
                den.push(psi_factor(&table, Ordering::Greater, va(u), vb(v)));
            }
            for w in 1..=k {
                if !i_set.contains(&w) {
                    num = &num * &psi_factor(&table, Ordering::Greater, va(u), va(w));
                    den.push(psi_factor(&table, Ordering::Less, va(u), va(w)));
                }
            }
        }
        sum = &sum + &RationalExpression::new(num, den);
    }
    let sum = sum.cancel();
    let allowed = ambient_factors::<C>(k, n);
    for f in sum.denominator_factors() {
        if !allowed.contains(f) {
            return Err(Error::NonCancellingDenominator(f.canonical_string()));
        }
    }
    Ok(sum)
}

/// The sieve expression for ts(Sigma^r_{k,n}):
/// sum_{a=r}^k (-1)^{a-r} q^{(a-r)(a-r-1)/2} binom(a,r)_q Phi^a.
pub fn segre_sieve<C: Coeff>(loc: RankLocus) -> Result<RationalExpression<C>> {
    let table = matrix_table(loc.k, loc.n);
    let mut qb = QBinomialTable::<C>::new();
    let mut sum = RationalExpression::<C>::zero(&table);
    for a in loc.r..=loc.k {
        let e = (a - loc.r) * (a - loc.r).saturating_sub(1) / 2;
        let mut coeff_q = &YPoly::monomial(C::one(), e) * &qb.get(a, loc.r);
        if (a - loc.r) % 2 == 1 {
            coeff_q = -&coeff_q;
        }
        // materialize q = -y
        let coeff_y = coeff_q.negate_variable();
        let phi = phi_resolution::<C>(a, loc.k, loc.n)?;
        let scaled = RationalExpression::new(
            phi.numerator().scale(&coeff_y),
            phi.denominator_factors().to_vec(),
        );
        sum = &sum + &scaled;
    }
    Ok(sum.cancel())
}

/// Exact agreement of the motivic and sieve expressions.
pub fn verify_rank_equality<C: Coeff>(loc: RankLocus) -> Result<bool> {
    let motivic = segre_class(tau_rank_motivic::<C>(loc)?, loc.k, loc.n);
    let sieve = segre_sieve::<C>(loc)?;
    Ok(motivic.rat_equal(&sieve))
}

/// The two q-binomial matrices of the sieve are inverse to each other.
pub fn sieve_matrix_inverse_check<C: Coeff>(kmax: usize) -> bool {
    assert!(kmax >= 1);
    let m = kmax + 1;
    let mut qb = QBinomialTable::<C>::new();
    let a_mat: Vec<Vec<YPoly<C>>> = (0..m)
        .map(|a| (0..m).map(|r| qb.get(a, r)).collect())
        .collect();
    let b_mat: Vec<Vec<YPoly<C>>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|r| {
                    if r > a {
                        return YPoly::zero();
                    }
                    let e = (a - r) * (a - r).saturating_sub(1) / 2;
                    let v = &YPoly::monomial(C::one(), e) * &qb.get(a, r);
                    if (a - r) % 2 == 1 {
                        -&v
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    let id_check = |x: &Vec<Vec<YPoly<C>>>, y: &Vec<Vec<YPoly<C>>>| {
        (0..m).all(|i| {
            (0..m).all(|j| {
                let mut acc = YPoly::<C>::zero();
                for l in 0..m {
                    acc = &acc + &(&x[i][l] * &y[l][j]);
                }
                if i == j {
                    acc.is_one()
                } else {
                    acc.is_zero()
                }
            })
        })
    };
    id_check(&a_mat, &b_mat) && id_check(&b_mat, &a_mat)
}

/// The supersymmetry functional equation: setting alpha_k = t and beta_n = t
/// in ts(Sigma^r_{k,n}) recovers ts(Sigma^r_{k-1,n-1}). Requires r < k.
pub fn supersymmetry_check<C: Coeff>(loc: RankLocus) -> Result<bool> {
    assert!(loc.r < loc.k, "reduction needs r <= k - 1");
    let (k, n) = (loc.k, loc.n);
    // Common table: a1..a_{k-1}, b1..b_{n-1}, t.
    let mut names: Vec<String> = (1..k).map(|u| format!("a{u}")).collect();
    names.extend((1..n).map(|v| format!("b{v}")));
    names.push("t".to_string());
    let target = VariableTable::new(names, Vec::new());
    let t_idx = target.arity() - 1;

    let big = segre_sieve::<C>(loc)?;
    let mut map = Vec::with_capacity(k + n);
    map.extend((0..k - 1).collect::<Vec<_>>());
    map.push(t_idx);
    map.extend((0..n - 1).map(|v| (k - 1) + v));
    map.push(t_idx);
    let reduced = big.map_variables(&target, &map)?;

    if k == 1 {
        return Ok(reduced.rat_equal(&RationalExpression::one(&target)));
    }
    let small = segre_sieve::<C>(RankLocus::new(k - 1, n - 1, loc.r))?;
    let small_map: Vec<usize> = (0..(k - 1) + (n - 1)).collect();
    let small = small.map_variables(&target, &small_map)?;
    Ok(reduced.rat_equal(&small))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ambient_lambda;
    use crate::parse::parse_polynomial;

    type C = i128;

    #[test]
    fn q_binomial_values() {
        assert!(q_binomial::<C>(5, 0).is_one());
        assert_eq!(q_binomial::<C>(2, 1).coeffs(), &[1, 1]);
        assert_eq!(q_binomial::<C>(4, 2).coeffs(), &[1, 1, 2, 1, 1]);
        assert!(q_binomial::<C>(2, 3).is_zero());
    }

    #[test]
    fn q_binomial_specialization_and_symmetry() {
        fn c(n: usize, k: usize) -> i128 {
            if k > n {
                return 0;
            }
            (1..=k as i128).fold(1, |acc, i| acc * (n as i128 - k as i128 + i) / i)
        }
        for a in 0..=8usize {
            for r in 0..=a {
                let b = q_binomial::<C>(a, r);
                assert_eq!(b.eval(&1), c(a, r), "binom({a},{r}) at q=1");
                assert_eq!(b, q_binomial::<C>(a, a - r), "symmetry ({a},{r})");
            }
        }
    }

    #[test]
    fn tau_additivity() {
        for (k, n) in [(1usize, 2usize), (2, 2), (2, 3)] {
            let table = matrix_table(k, n);
            let mut sum = LaurentPolynomial::<C>::zero(&table);
            for r in 0..=k {
                sum = &sum + &tau_rank_motivic(RankLocus::new(k, n, r)).unwrap();
            }
            assert_eq!(sum, ambient_lambda(k, n), "additivity ({k},{n})");
        }
    }

    #[test]
    fn phi_base_cases() {
        // a = 0: the empty subset gives 1
        let phi0 = phi_resolution::<C>(0, 2, 2).unwrap();
        assert!(phi0.rat_equal(&RationalExpression::one(phi0.table())));
        // a = k: single subset, no alpha factors
        let phi2 = phi_resolution::<C>(2, 2, 2).unwrap();
        let t = matrix_table(2, 2);
        let mut num = LaurentPolynomial::<C>::one(&t);
        for u in 1..=2usize {
            for v in 1..=2usize {
                num = &num
                    * &parse_polynomial::<C>(&format!("(1) + (-1)*a{u}^1*b{v}^-1"), &t).unwrap();
            }
        }
        let expect = RationalExpression::new(num, ambient_factors(2, 2));
        assert!(phi2.rat_equal(&expect));
    }

    #[test]
    fn phi_denominator_submultiset() {
        for (a, k, n) in [(1usize, 2usize, 2usize), (1, 2, 3), (2, 3, 3)] {
            let phi = phi_resolution::<C>(a, k, n).unwrap();
            let allowed = ambient_factors::<C>(k, n);
            for f in phi.denominator_factors() {
                assert!(allowed.contains(f), "unexpected denominator in Phi^{a}_{k},{n}");
            }
        }
    }

    #[test]
    fn sieve_closed_form_displays() {
        // ts(Sigma^2_{2,2}) = prod (1 - a/b) / prod (1 + y a/b)
        let got = segre_sieve::<C>(RankLocus::new(2, 2, 2)).unwrap();
        let phi2 = phi_resolution::<C>(2, 2, 2).unwrap();
        assert!(got.rat_equal(&phi2));

        // ts(Sigma^0_{2,2}): the displayed (q-1)^2 * a1a2/(b1b2) * (...) form
        let t = matrix_table(2, 2);
        let got0 = segre_sieve::<C>(RankLocus::new(2, 2, 0)).unwrap();
        // (q-1)^2 = (1+y)^2 at q = -y
        let pre = parse_polynomial::<C>("(1+2*y+y^2)*a1^1*a2^1*b1^-1*b2^-1", &t).unwrap();
        // q^2 x + q(x - s + 1) + 1 at q = -y: y^2 x - y(x - s + 1) + 1
        let inner = parse_polynomial::<C>(
            "(1-y) + (-y+y^2)*a1^1*a2^1*b1^-1*b2^-1 + (y)*a1^1*b1^-1 + (y)*a1^1*b2^-1 \
             + (y)*a2^1*b1^-1 + (y)*a2^1*b2^-1",
            &t,
        )
        .unwrap();
        let expect = RationalExpression::new(&pre * &inner, ambient_factors(2, 2));
        assert!(got0.rat_equal(&expect));
    }

    #[test]
    fn rank_equality_small() {
        for (k, n) in [(1usize, 1usize), (1, 2), (2, 2)] {
            for r in 0..=k {
                assert!(
                    verify_rank_equality::<C>(RankLocus::new(k, n, r)).unwrap(),
                    "rank equality fails for ({k},{n},{r})"
                );
            }
        }
    }

    #[test]
    fn matrix_inverses() {
        assert!(sieve_matrix_inverse_check::<C>(1));
        assert!(sieve_matrix_inverse_check::<C>(3));
    }

    #[test]
    fn supersymmetry_small() {
        assert!(supersymmetry_check::<C>(RankLocus::new(1, 1, 0)).unwrap());
        assert!(supersymmetry_check::<C>(RankLocus::new(2, 2, 1)).unwrap());
    }
}
