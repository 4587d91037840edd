//! Rational expressions: a Laurent numerator over a multiset of factored
//! denominators. Denominators are never expanded; cancellation is attempted
//! factor by factor with exact division.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;
use crate::vars::{check_same_table, Block, VariableTable};
use itertools::Itertools;
use rayon::prelude::*;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Numerator / product of denominator factors, all over one variable table.
///
/// Equality of values is [`RationalExpression::rat_equal`] (cross
/// multiplication); `PartialEq` compares representations and is only used in
/// tests for canonical forms.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalExpression<C: Coeff> {
    numerator: LaurentPolynomial<C>,
    denominator: Vec<LaurentPolynomial<C>>,
}

fn multiset_union<C: Coeff>(
    a: &[LaurentPolynomial<C>],
    b: &[LaurentPolynomial<C>],
) -> Vec<LaurentPolynomial<C>> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j] < a[i] {
            out.push(b[j].clone());
            j += 1;
        } else {
            out.push(a[i].clone());
            i += 1;
            j += 1;
        }
    }
    out
}

/// Multiset difference a \ b; panics if b is not a sub-multiset of a.
fn multiset_diff<C: Coeff>(
    a: &[LaurentPolynomial<C>],
    b: &[LaurentPolynomial<C>],
) -> Vec<LaurentPolynomial<C>> {
    let mut out = Vec::new();
    let mut j = 0;
    for f in a {
        if j < b.len() && *f == b[j] {
            j += 1;
        } else {
            out.push(f.clone());
        }
    }
    assert_eq!(j, b.len(), "multiset difference of non-sub-multiset");
    out
}

impl<C: Coeff> RationalExpression<C> {
    pub fn from_poly(p: LaurentPolynomial<C>) -> Self {
        RationalExpression {
            numerator: p,
            denominator: Vec::new(),
        }
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::from_poly(LaurentPolynomial::one(table))
    }

    pub fn zero(table: &Arc<VariableTable>) -> Self {
        Self::from_poly(LaurentPolynomial::zero(table))
    }

    /// # Panics
    /// Panics if any denominator factor is zero or over a different table.
    pub fn new(
        numerator: LaurentPolynomial<C>,
        mut denominator: Vec<LaurentPolynomial<C>>,
    ) -> Self {
        for f in &denominator {
            check_same_table(numerator.table(), f.table());
            assert!(!f.is_zero(), "zero denominator factor");
        }
        if numerator.is_zero() {
            denominator.clear();
        }
        denominator.sort();
        RationalExpression {
            numerator,
            denominator,
        }
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.numerator.table()
    }

    pub fn numerator(&self) -> &LaurentPolynomial<C> {
        &self.numerator
    }

    pub fn denominator_factors(&self) -> &[LaurentPolynomial<C>] {
        &self.denominator
    }

    pub fn denominator_product(&self) -> LaurentPolynomial<C> {
        self.denominator
            .iter()
            .fold(LaurentPolynomial::one(self.table()), |acc, f| &acc * f)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The underlying polynomial, if no denominator factors remain.
    pub fn as_polynomial(&self) -> Option<&LaurentPolynomial<C>> {
        if self.denominator.is_empty() {
            Some(&self.numerator)
        } else {
            None
        }
    }

    /// Push an extra denominator factor.
    pub fn div_by(&self, factor: LaurentPolynomial<C>) -> Self {
        check_same_table(self.table(), factor.table());
        assert!(!factor.is_zero(), "zero denominator factor");
        let mut denominator = self.denominator.clone();
        denominator.push(factor);
        Self::new(self.numerator.clone(), denominator)
    }

    /// Greedily cancel denominator factors into the numerator.
    pub fn cancel(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        loop {
            let mut progressed = false;
            let mut i = 0;
            while i < den.len() {
                if let Some(q) = num.exact_div(&den[i]) {
                    num = q;
                    den.remove(i);
                    progressed = true;
                } else {
                    i += 1;
                }
            }
            if !progressed {
                break;
            }
        }
        Self::new(num, den)
    }

    /// Value equality by cross-multiplication.
    pub fn rat_equal(&self, other: &Self) -> bool {
        check_same_table(self.table(), other.table());
        // Shared factors drop out of the cross products.
        let common: Vec<_> = {
            let mut c = Vec::new();
            let mut j = 0;
            for f in &self.denominator {
                while j < other.denominator.len() && other.denominator[j] < *f {
                    j += 1;
                }
                if j < other.denominator.len() && other.denominator[j] == *f {
                    c.push(f.clone());
                    j += 1;
                }
            }
            c
        };
        let da = multiset_diff(&self.denominator, &common);
        let db = multiset_diff(&other.denominator, &common);
        let lhs = db
            .iter()
            .fold(self.numerator.clone(), |acc, f| &acc * f);
        let rhs = da
            .iter()
            .fold(other.numerator.clone(), |acc, f| &acc * f);
        lhs == rhs
    }

    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        Self::new(
            self.numerator.permute_variables(perm),
            self.denominator
                .iter()
                .map(|f| f.permute_variables(perm))
                .collect(),
        )
    }

    /// Substitute variables per `map` into `target`; denominator factors must
    /// stay nonzero.
    pub fn map_variables(
        &self,
        target: &Arc<VariableTable>,
        map: &[usize],
    ) -> Result<RationalExpression<C>> {
        let num = self.numerator.map_variables(target, map);
        let mut den = Vec::with_capacity(self.denominator.len());
        for f in &self.denominator {
            let g = f.map_variables(target, map);
            if g.is_zero() {
                return Err(Error::ZeroDenominator(f.canonical_string()));
            }
            den.push(g);
        }
        Ok(RationalExpression::new(num, den))
    }

    /// Toric substitution to a one-variable expression in xi.
    pub fn toric_substitute(&self, s: &[i64]) -> Result<RationalExpression<C>> {
        let num = self.numerator.toric_substitute(s);
        let mut den = Vec::with_capacity(self.denominator.len());
        for f in &self.denominator {
            let g = f.toric_substitute(s);
            if g.is_zero() {
                return Err(Error::ZeroDenominator(f.canonical_string()));
            }
            den.push(g);
        }
        Ok(RationalExpression::new(num, den))
    }

    /// Orbit sum over the product of symmetric groups of the given blocks,
    /// divided exactly by `divisor`, then cancelled.
    ///
    /// The reduction order does not affect the result: addition keeps the
    /// multiset-union denominator, and union is associative and commutative.
    pub fn symmetrize(&self, blocks: &[Block], divisor: u64) -> Result<Self> {
        let arity = self.table().arity();
        let perms = block_permutations(arity, blocks);
        let sum = perms
            .par_iter()
            .map(|p| self.permute_variables(p))
            .reduce(|| Self::zero(self.table()), |a, b| &a + &b);
        let divided = if divisor <= 1 {
            sum
        } else {
            let d = C::from(divisor as i64);
            let num = sum
                .numerator
                .exact_div_scalar(&d)
                .ok_or_else(|| Error::InexactDivisor(format!("{divisor}")))?;
            Self::new(num, sum.denominator)
        };
        Ok(divided.cancel())
    }

    /// True if invariant under every permutation within each block
    /// (checked on adjacent transpositions, which generate).
    pub fn is_block_symmetric(&self, blocks: &[Block]) -> bool {
        let arity = self.table().arity();
        for b in blocks {
            for i in b.start..b.start + b.len.saturating_sub(1) {
                let mut perm: Vec<usize> = (0..arity).collect();
                perm.swap(i, i + 1);
                if !self.permute_variables(&perm).rat_equal(self) {
                    return false;
                }
            }
        }
        true
    }

    pub fn canonical_string(&self) -> String {
        self.string_impl(false)
    }

    /// Like `canonical_string` but with coefficients printed in q = -y.
    pub fn q_string(&self) -> String {
        self.string_impl(true)
    }

    fn string_impl(&self, q_display: bool) -> String {
        let show = |p: &LaurentPolynomial<C>| {
            if q_display {
                p.q_string()
            } else {
                p.canonical_string()
            }
        };
        if self.denominator.is_empty() {
            return show(&self.numerator);
        }
        let den = self
            .denominator
            .iter()
            .map(|f| format!("[{}]", show(f)))
            .join("*");
        format!("[{}] / {}", show(&self.numerator), den)
    }
}

/// All permutations of `0..arity` that move only within the given blocks.
pub fn block_permutations(arity: usize, blocks: &[Block]) -> Vec<Vec<usize>> {
    let mut perms = vec![(0..arity).collect::<Vec<usize>>()];
    for b in blocks {
        let idx: Vec<usize> = b.indices().collect();
        let mut next = Vec::new();
        for images in idx.iter().copied().permutations(idx.len()) {
            for base in &perms {
                let mut p = base.clone();
                for (src, dst) in idx.iter().zip(&images) {
                    p[*src] = base[*dst];
                }
                next.push(p);
            }
        }
        perms = next;
    }
    perms
}

impl<C: Coeff> fmt::Display for RationalExpression<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl<C: Coeff> fmt::Debug for RationalExpression<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalExpression({self})")
    }
}

impl<C: Coeff> Add for &RationalExpression<C> {
    type Output = RationalExpression<C>;
    fn add(self, rhs: Self) -> RationalExpression<C> {
        check_same_table(self.table(), rhs.table());
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let common = multiset_union(&self.denominator, &rhs.denominator);
        let scale_a = multiset_diff(&common, &self.denominator);
        let scale_b = multiset_diff(&common, &rhs.denominator);
        let na = scale_a
            .iter()
            .fold(self.numerator.clone(), |acc, f| &acc * f);
        let nb = scale_b
            .iter()
            .fold(rhs.numerator.clone(), |acc, f| &acc * f);
        RationalExpression::new(&na + &nb, common)
    }
}

impl<C: Coeff> Sub for &RationalExpression<C> {
    type Output = RationalExpression<C>;
    fn sub(self, rhs: Self) -> RationalExpression<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Neg for &RationalExpression<C> {
    type Output = RationalExpression<C>;
    fn neg(self) -> RationalExpression<C> {
        RationalExpression {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

impl<C: Coeff> Mul for &RationalExpression<C> {
    type Output = RationalExpression<C>;
    fn mul(self, rhs: Self) -> RationalExpression<C> {
        check_same_table(self.table(), rhs.table());
        let mut den = self.denominator.clone();
        den.extend(rhs.denominator.iter().cloned());
        RationalExpression::new(&self.numerator * &rhs.numerator, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::vars::VariableTable;
    use crate::ypoly::YPoly;

    type P = LaurentPolynomial<i64>;
    type R = RationalExpression<i64>;

    fn ab() -> Arc<VariableTable> {
        VariableTable::new(vec!["a", "b"], vec![Block::new(0, 2)])
    }

    #[test]
    fn rat_equal_examples() {
        let t = ab();
        let f = &P::one(&t) - &P::monomial(&t, Monomial::var_pow(2, 0, -1));
        let r = R::new(f.clone(), vec![f.clone()]);
        assert!(r.rat_equal(&R::one(&t)));
        // (1+y)/a vs 1 + y/a
        let inv_a = Monomial::var_pow(2, 0, -1);
        let lhs = R::new(
            P::constant(&t, &YPoly::one() + &YPoly::y()),
            vec![P::monomial(&t, Monomial::var(2, 0))],
        );
        let rhs = R::from_poly(&P::one(&t) + &P::term(&t, inv_a, YPoly::y()));
        assert!(!lhs.rat_equal(&rhs));
    }

    #[test]
    fn atom_sum() {
        // (1 - 1/a) + (1+y)/a = 1 + y/a, with the left part written as
        // (a-1)/a to exercise the common-denominator path.
        let t = ab();
        let a = P::monomial(&t, Monomial::var(2, 0));
        let part1 = R::new(&a - &P::one(&t), vec![a.clone()]);
        let part2 = R::new(P::constant(&t, &YPoly::one() + &YPoly::y()), vec![a]);
        let sum = (&part1 + &part2).cancel();
        let expect = &P::one(&t) + &P::term(&t, Monomial::var_pow(2, 0, -1), YPoly::y());
        assert_eq!(sum.as_polynomial(), Some(&expect));
    }

    #[test]
    fn symmetrize_linear() {
        let t = ab();
        let f = R::from_poly(P::var(&t, 0));
        let sym = f.symmetrize(t.blocks(), 1).unwrap();
        let expect = &P::var(&t, 0) + &P::var(&t, 1);
        assert_eq!(sym.as_polynomial(), Some(&expect));
        assert!(sym.is_block_symmetric(t.blocks()));
    }

    #[test]
    fn symmetrize_trivial_group() {
        let t = VariableTable::new(vec!["a", "b"], vec![Block::new(0, 1)]);
        let f = R::from_poly(P::var(&t, 0));
        assert!(f.symmetrize(t.blocks(), 1).unwrap().rat_equal(&f));
    }

    #[test]
    fn symmetrize_inexact_divisor() {
        let t = ab();
        let f = R::from_poly(P::var(&t, 0));
        assert!(matches!(
            f.symmetrize(t.blocks(), 2),
            Err(Error::InexactDivisor(_))
        ));
    }

    #[test]
    fn cancel_collapses() {
        let t = ab();
        let p = &P::one(&t) + &P::term(&t, Monomial::var_pow(2, 0, -1), YPoly::y());
        let q = &P::one(&t) - &P::monomial(&t, Monomial::var_pow(2, 1, -1));
        let r = R::new(&(&p * &q) * &q, vec![q.clone(), p.clone()]);
        let c = r.cancel();
        assert_eq!(c.as_polynomial(), Some(&q));
    }

    #[test]
    fn block_permutation_count() {
        let perms = block_permutations(5, &[Block::new(0, 2), Block::new(2, 3)]);
        assert_eq!(perms.len(), 12);
        let id: Vec<usize> = (0..5).collect();
        assert!(perms.contains(&id));
    }
}
