//! Weight functions for matrix Schubert cells in Hom(C^k, C^n).

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;
use crate::psi::psi_factor;
use crate::rational::RationalExpression;
use crate::vars::{Block, VariableTable};
use itertools::Itertools;
use std::cmp::Ordering;
use std::sync::Arc;

/// Orbit of the GL_k x B_n^- action on Hom(C^k, C^n): a subset
/// J = {j_1 < ... < j_d} of {1..n} with d <= k.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrbitIndex {
    k: usize,
    n: usize,
    j: Vec<usize>,
}

impl OrbitIndex {
    pub fn new(k: usize, n: usize, mut j: Vec<usize>) -> Self {
        assert!(k >= 1 && k <= n, "need 1 <= k <= n");
        j.sort_unstable();
        j.dedup();
        assert!(j.len() <= k, "need |J| <= k");
        assert!(j.iter().all(|&v| v >= 1 && v <= n), "J entries out of range");
        OrbitIndex { k, n, j }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.j.len()
    }

    pub fn j(&self) -> &[usize] {
        &self.j
    }
}

/// The alpha/beta table for Hom(C^k, C^n): a1..ak (one S_k block), b1..bn.
pub fn matrix_table(k: usize, n: usize) -> Arc<VariableTable> {
    let mut names: Vec<String> = (1..=k).map(|u| format!("a{u}")).collect();
    names.extend((1..=n).map(|v| format!("b{v}")));
    VariableTable::new(names, vec![Block::new(0, k)])
}

fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// The unsymmetrized term U_{k,n,J}.
pub fn u_matrix<C: Coeff>(idx: &OrbitIndex) -> RationalExpression<C> {
    let (k, n, d) = (idx.k, idx.n, idx.d());
    let table = matrix_table(k, n);
    let va = |u: usize| u - 1;
    let vb = |v: usize| k + v - 1;
    let mut num = LaurentPolynomial::<C>::one(&table);
    let mut den = Vec::new();
    for u in 1..=k {
        for v in 1..=n {
            let case = if u > d {
                Ordering::Less
            } else {
                v.cmp(&idx.j[u - 1])
            };
            num = &num * &psi_factor(&table, case, va(u), vb(v));
        }
    }
    for u in 1..=d {
        for v in (u + 1)..=k {
            num = &num * &psi_factor(&table, Ordering::Greater, va(v), va(u));
            den.push(psi_factor(&table, Ordering::Less, va(v), va(u)));
        }
    }
    RationalExpression::new(num, den)
}

/// The weight function W_{k,n,J}: the S_k orbit sum of U divided exactly by
/// (k-d)!, which collapses to a Laurent polynomial.
pub fn weight_function_matrix<C: Coeff>(idx: &OrbitIndex) -> Result<LaurentPolynomial<C>> {
    let u = u_matrix::<C>(idx);
    let w = u.symmetrize(&[Block::new(0, idx.k)], factorial(idx.k - idx.d()))?;
    match w.as_polynomial() {
        Some(p) => Ok(p.clone()),
        None => Err(Error::NonCancellingDenominator(
            w.denominator_factors()[0].canonical_string(),
        )),
    }
}

/// lambda_y of the dual ambient space: prod (1 + y a_u / b_v).
pub fn ambient_lambda<C: Coeff>(k: usize, n: usize) -> LaurentPolynomial<C> {
    let table = matrix_table(k, n);
    let mut p = LaurentPolynomial::one(&table);
    for u in 1..=k {
        for v in 1..=n {
            p = &p * &psi_factor(&table, Ordering::Greater, u - 1, k + v - 1);
        }
    }
    p
}

/// Residual of the orbit-sum identity: sum over all J of W_{k,n,J} minus
/// prod (1 + y a_u / b_v). Zero iff the identity holds.
pub fn orbit_sum_identity<C: Coeff>(k: usize, n: usize) -> Result<LaurentPolynomial<C>> {
    let table = matrix_table(k, n);
    let mut sum = LaurentPolynomial::<C>::zero(&table);
    for d in 0..=k {
        for j in (1..=n).combinations(d) {
            sum = &sum + &weight_function_matrix(&OrbitIndex::new(k, n, j))?;
        }
    }
    Ok(&sum - &ambient_lambda(k, n))
}

/// Independently rebuild W_{k,n,J} as the localization sum over the cosets
/// S_k/S_{k-d} (each term the alpha-permuted U) and compare.
pub fn localization_identity_check<C: Coeff>(idx: &OrbitIndex) -> Result<bool> {
    let (k, d) = (idx.k, idx.d());
    assert!(d >= 1, "localization check needs a nontrivial flag factor");
    let u = u_matrix::<C>(idx);
    let table = u.table().clone();
    let mut sum = RationalExpression::<C>::zero(&table);
    // Coset representatives: ordered d-tuples of distinct elements of {1..k},
    // trailing images in increasing order.
    for head in (1..=k).permutations(d) {
        let tail: Vec<usize> = (1..=k).filter(|v| !head.contains(v)).collect();
        let mut perm: Vec<usize> = (0..table.arity()).collect();
        for (u_pos, &img) in head.iter().chain(&tail).enumerate() {
            perm[u_pos] = img - 1;
        }
        sum = &sum + &u.permute_variables(&perm);
    }
    let w = RationalExpression::from_poly(weight_function_matrix::<C>(idx)?);
    Ok(sum.rat_equal(&w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    type C = i128;

    fn w(k: usize, n: usize, j: &[usize]) -> LaurentPolynomial<C> {
        weight_function_matrix(&OrbitIndex::new(k, n, j.to_vec())).unwrap()
    }

    fn p(k: usize, n: usize, s: &str) -> LaurentPolynomial<C> {
        parse_polynomial(s, &matrix_table(k, n)).unwrap()
    }

    #[test]
    fn golden_w12() {
        // (1+y)(a1/b1)(1 + y a1/b2)
        let expect = &p(1, 2, "(1+y)*a1^1*b1^-1") * &p(1, 2, "(1) + (y)*a1^1*b2^-1");
        assert_eq!(w(1, 2, &[1]), expect);
        // (1+y)(1 - a1/b1)(a1/b2)
        let expect = &p(1, 2, "(1) + (-1)*a1^1*b1^-1") * &p(1, 2, "(1+y)*a1^1*b2^-1");
        assert_eq!(w(1, 2, &[2]), expect);
        // (1 - a1/b1)(1 - a1/b2)
        let expect =
            &p(1, 2, "(1) + (-1)*a1^1*b1^-1") * &p(1, 2, "(1) + (-1)*a1^1*b2^-1");
        assert_eq!(w(1, 2, &[]), expect);
    }

    #[test]
    fn golden_w1n_closed_form() {
        for n in 1..=4usize {
            for u in 1..=n {
                let t = matrix_table(1, n);
                let mut expect = parse_polynomial::<C>("(1+y)", &t).unwrap();
                for i in 1..u {
                    expect = &expect * &p(1, n, &format!("(1) + (-1)*a1^1*b{i}^-1"));
                }
                expect = &expect * &p(1, n, &format!("(1)*a1^1*b{u}^-1"));
                for i in (u + 1)..=n {
                    expect = &expect * &p(1, n, &format!("(1) + (y)*a1^1*b{i}^-1"));
                }
                assert_eq!(w(1, n, &[u]), expect, "W_(1,{n},{{{u}}})");
            }
        }
    }

    #[test]
    fn golden_w22() {
        // (1+y)^2 (a1 a2 / b1 b2) (y^2 a1a2/b1b2
        //   + y(-a1a2/b1b2 + a1/b1 + a1/b2 + a2/b1 + a2/b2 - 1) + 1)
        let t = matrix_table(2, 2);
        let pre = parse_polynomial::<C>("(1+2*y+y^2)*a1^1*a2^1*b1^-1*b2^-1", &t).unwrap();
        let inner = parse_polynomial::<C>(
            "(1-y) + (-y+y^2)*a1^1*a2^1*b1^-1*b2^-1 + (y)*a1^1*b1^-1 + (y)*a1^1*b2^-1 \
             + (y)*a2^1*b1^-1 + (y)*a2^1*b2^-1",
            &t,
        )
        .unwrap();
        assert_eq!(w(2, 2, &[1, 2]), &pre * &inner);
    }

    #[test]
    fn golden_w24() {
        let t = matrix_table(2, 4);
        let mut outer = parse_polynomial::<C>("(1+2*y+y^2)*a1^1*a2^1", &t).unwrap();
        for i in 1..=2 {
            outer = &outer * &p(2, 4, &format!("(1) + (-1)*a{i}^1*b1^-1"));
            outer = &outer * &p(2, 4, &format!("(1) + (y)*a{i}^1*b4^-1"));
        }
        let inner = parse_polynomial::<C>(
            "(1-y)*b2^-1*b3^-1 + (-y+y^2)*a1^1*a2^1*b2^-2*b3^-2 \
             + (y)*a1^1*b2^-1*b3^-2 + (y)*a1^1*b2^-2*b3^-1 \
             + (y)*a2^1*b2^-1*b3^-2 + (y)*a2^1*b2^-2*b3^-1",
            &t,
        )
        .unwrap();
        assert_eq!(w(2, 4, &[2, 3]), &outer * &inner);
    }

    #[test]
    fn orbit_sums() {
        assert!(orbit_sum_identity::<C>(1, 1).unwrap().is_zero());
        assert!(orbit_sum_identity::<C>(1, 2).unwrap().is_zero());
        assert!(orbit_sum_identity::<C>(2, 3).unwrap().is_zero());
    }

    #[test]
    fn symmetry_in_alpha() {
        let w23 = w(2, 3, &[2]);
        let t = matrix_table(2, 3);
        let mut perm: Vec<usize> = (0..t.arity()).collect();
        perm.swap(0, 1);
        assert_eq!(w23.permute_variables(&perm), w23);
    }

    #[test]
    fn localization() {
        for (k, n, j) in [
            (1usize, 2usize, vec![1usize]),
            (2, 2, vec![1, 2]),
            (2, 3, vec![2]),
            (2, 4, vec![2, 3]),
        ] {
            assert!(
                localization_identity_check::<C>(&OrbitIndex::new(k, n, j.clone())).unwrap(),
                "localization fails for ({k},{n},{j:?})"
            );
        }
    }

    #[test]
    fn flag_bridge() {
        // W_{k,n,I} with |I| = k equals the flag weight function of
        // (I, complement) after renaming variables.
        use crate::flag::{weight_function_flag, CompositionIndex};
        for (k, n, j) in [(1usize, 2usize, vec![1usize]), (1, 2, vec![2]), (2, 4, vec![2, 3])] {
            let comp: Vec<usize> = (1..=n).filter(|v| !j.contains(v)).collect();
            let fl = CompositionIndex::new(vec![j.clone(), comp]);
            let wf = weight_function_flag::<C>(&fl);
            let mt = matrix_table(k, n);
            let map: Vec<usize> = (0..mt.arity()).collect();
            let flag_w = wf.w.map_variables(&mt, &map).unwrap();
            let mat_w = RationalExpression::from_poly(w(k, n, &j));
            assert!(flag_w.rat_equal(&mat_w), "bridge fails for ({k},{n},{j:?})");
        }
    }
}
