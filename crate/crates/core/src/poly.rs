//! Exact multivariate Laurent polynomials with Z[y] coefficients.

use crate::coeff::Coeff;
use crate::vars::{check_same_table, VariableTable};
use crate::ypoly::YPoly;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Exponent vector indexed by a variable table. Negative exponents allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<i64>,
}

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        Monomial { exponents }
    }

    /// The multiplicative identity of the given arity.
    pub fn unit(arity: usize) -> Self {
        Monomial {
            exponents: vec![0; arity],
        }
    }

    /// A single variable.
    pub fn var(arity: usize, index: usize) -> Self {
        Self::var_pow(arity, index, 1)
    }

    pub fn var_pow(arity: usize, index: usize, exp: i64) -> Self {
        let mut exponents = vec![0; arity];
        exponents[index] = exp;
        Monomial { exponents }
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        assert_eq!(self.arity(), rhs.arity(), "monomial arity mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn div(&self, rhs: &Monomial) -> Monomial {
        assert_eq!(self.arity(), rhs.arity(), "monomial arity mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|e| -e).collect(),
        }
    }
}

// Graded-lex: total degree first, then lexicographic on the exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Which lambda-class flavor to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaSign {
    /// Factors 1 + y*w.
    Y,
    /// Factors 1 - w.
    MinusOne,
}

/// Multivariate Laurent polynomial over Z[y].
///
/// Terms are kept in a `BTreeMap` under the graded-lex monomial order, with no
/// zero coefficients stored, so equal polynomials have identical
/// representations and serialization is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial<C: Coeff> {
    table: Arc<VariableTable>,
    terms: BTreeMap<Monomial, YPoly<C>>,
}

impl<C: Coeff> LaurentPolynomial<C> {
    pub fn zero(table: &Arc<VariableTable>) -> Self {
        LaurentPolynomial {
            table: Arc::clone(table),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::constant(table, YPoly::one())
    }

    pub fn constant(table: &Arc<VariableTable>, c: YPoly<C>) -> Self {
        Self::term(table, Monomial::unit(table.arity()), c)
    }

    /// Single-term polynomial c * m.
    pub fn term(table: &Arc<VariableTable>, m: Monomial, c: YPoly<C>) -> Self {
        assert_eq!(m.arity(), table.arity(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPolynomial {
            table: Arc::clone(table),
            terms,
        }
    }

    /// The variable with the given index.
    pub fn var(table: &Arc<VariableTable>, index: usize) -> Self {
        Self::term(table, Monomial::var(table.arity(), index), YPoly::one())
    }

    pub fn monomial(table: &Arc<VariableTable>, m: Monomial) -> Self {
        Self::term(table, m, YPoly::one())
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map_or(false, |(m, c)| m.is_unit() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &YPoly<C>)> {
        self.terms.iter()
    }

    /// If the polynomial is a single term, return it.
    pub fn as_single_term(&self) -> Option<(&Monomial, &YPoly<C>)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// If constant, return the Z[y] value.
    pub fn as_constant(&self) -> Option<YPoly<C>> {
        if self.is_zero() {
            return Some(YPoly::zero());
        }
        match self.as_single_term() {
            Some((m, c)) if m.is_unit() => Some(c.clone()),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: &YPoly<C>) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &YPoly<C>) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v * c))
            .collect();
        LaurentPolynomial {
            table: Arc::clone(&self.table),
            terms,
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(t, v)| (t.mul(m), v.clone()))
            .collect();
        LaurentPolynomial {
            table: Arc::clone(&self.table),
            terms,
        }
    }

    /// Product of lambda-class factors over a list of weight monomials:
    /// `(1 + y*w^e)` or `(1 - w^e)` per weight, with `e = -1` when `dual`.
    pub fn lambda_class(
        table: &Arc<VariableTable>,
        weights: &[Monomial],
        sign: LambdaSign,
        dual: bool,
    ) -> Self {
        let mut acc = Self::one(table);
        for w in weights {
            let m = if dual { w.inverse() } else { w.clone() };
            let coeff = match sign {
                LambdaSign::Y => YPoly::y(),
                LambdaSign::MinusOne => YPoly::constant(C::one().neg()),
            };
            let factor = &Self::one(table) + &Self::term(table, m, coeff);
            acc = &acc * &factor;
        }
        acc
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    ///
    /// # Panics
    /// Panics if `divisor` is zero.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        check_same_table(&self.table, &divisor.table);
        assert!(!divisor.is_zero(), "division of Laurent polynomial by zero");
        if self.is_zero() {
            return Some(Self::zero(&self.table));
        }
        let arity = self.table.arity();
        // Any monomial of a valid quotient lies in the per-variable exponent
        // box [min(p) - max(q), max(p) - min(q)]; leaving it proves failure.
        let mut lo = vec![i64::MAX; arity];
        let mut hi = vec![i64::MIN; arity];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                lo[i] = lo[i].min(e);
                hi[i] = hi[i].max(e);
            }
        }
        let mut qlo = vec![i64::MAX; arity];
        let mut qhi = vec![i64::MIN; arity];
        for m in divisor.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                qlo[i] = qlo[i].min(e);
                qhi[i] = qhi[i].max(e);
            }
        }
        let box_lo: Vec<i64> = lo.iter().zip(&qhi).map(|(a, b)| a - b).collect();
        let box_hi: Vec<i64> = hi.iter().zip(&qlo).map(|(a, b)| a - b).collect();

        let (lead_m, lead_c) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.table);
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.terms.iter().next_back().unwrap();
                (m.clone(), c.clone())
            };
            let tm = rm.div(lead_m);
            if tm
                .exponents()
                .iter()
                .enumerate()
                .any(|(i, &e)| e < box_lo[i] || e > box_hi[i])
            {
                return None;
            }
            let tc = rc.exact_div(lead_c)?;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&tm), &(dc * &tc).neg());
            }
            quot.add_term(tm, &tc);
        }
        Some(quot)
    }

    /// Exact division of every coefficient by an integer scalar.
    pub fn exact_div_scalar(&self, s: &C) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.clone(), c.exact_div_scalar(s)?);
        }
        Some(LaurentPolynomial {
            table: Arc::clone(&self.table),
            terms,
        })
    }

    /// The toric substitution `alpha_i -> xi^{s_i}`, producing a one-variable
    /// Laurent polynomial over a fresh `xi` table.
    pub fn toric_substitute(&self, s: &[i64]) -> LaurentPolynomial<C> {
        assert_eq!(
            s.len(),
            self.table.arity(),
            "substitution vector length must equal table arity"
        );
        let xi = crate::vars::VariableTable::flat(vec!["xi"]);
        let mut out = LaurentPolynomial::zero(&xi);
        for (m, c) in &self.terms {
            let deg: i64 = m
                .exponents()
                .iter()
                .zip(s)
                .map(|(e, si)| e * si)
                .sum();
            out.add_term(Monomial::new(vec![deg]), c);
        }
        out
    }

    /// Substitute each variable by a variable of `target`, per `map`
    /// (source index -> target index). Exponents accumulate.
    pub fn map_variables(
        &self,
        target: &Arc<VariableTable>,
        map: &[usize],
    ) -> LaurentPolynomial<C> {
        assert_eq!(map.len(), self.table.arity(), "variable map length mismatch");
        let mut out = LaurentPolynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0i64; target.arity()];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(Monomial::new(exps), c);
        }
        out
    }

    /// Apply a permutation of the variables of the own table:
    /// variable `i` is renamed to variable `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.table.arity(), "permutation length mismatch");
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            let mut exps = vec![0i64; perm.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[perm[i]] = e;
            }
            out.add_term(Monomial::new(exps), c);
        }
        out
    }

    /// Exponent vectors of the support (the Newton polytope generators).
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().map(|m| m.exponents().to_vec()).collect()
    }

    /// Canonical text form; see the crate-level serialization notes.
    pub fn canonical_string(&self) -> String {
        self.render(false)
    }

    /// Like `canonical_string` but with coefficients printed in q = -y.
    pub fn q_string(&self) -> String {
        self.render(true)
    }

    fn render(&self, q_display: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let var = if q_display { "q" } else { "y" };
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut s = format!("({})", c.display(var, q_display));
            for (i, &e) in m.exponents().iter().enumerate() {
                if e != 0 {
                    s.push('*');
                    s.push_str(self.table.name(i));
                    s.push_str(&format!("^{e}"));
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

// Order on the sorted term list; used to keep denominator factor multisets
// in a canonical order. Only meaningful between same-table polynomials.
impl<C: Coeff> Ord for LaurentPolynomial<C> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl<C: Coeff> PartialOrd for LaurentPolynomial<C> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coeff> fmt::Display for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl<C: Coeff> Add for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;
    fn add(self, rhs: Self) -> LaurentPolynomial<C> {
        check_same_table(&self.table, &rhs.table);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<C: Coeff> Sub for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;
    fn sub(self, rhs: Self) -> LaurentPolynomial<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Neg for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;
    fn neg(self) -> LaurentPolynomial<C> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.neg()))
            .collect();
        LaurentPolynomial {
            table: Arc::clone(&self.table),
            terms,
        }
    }
}

impl<C: Coeff> Mul for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;
    fn mul(self, rhs: Self) -> LaurentPolynomial<C> {
        check_same_table(&self.table, &rhs.table);
        let mut out = LaurentPolynomial::zero(&self.table);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}
