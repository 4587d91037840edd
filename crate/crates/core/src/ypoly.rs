//! Dense univariate polynomials over an exact integer scalar.
//!
//! `YPoly` is the coefficient ring Z[y] of every Laurent polynomial in this
//! crate. It doubles as the ring of q-polynomials (q-binomials are computed in
//! q and materialized as y-polynomials through `q = -y`).

use crate::coeff::Coeff;
use num_rational::Ratio;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Polynomial in one variable with nonnegative exponents, ascending-degree
/// coefficient storage. Canonical: empty vector is zero, last entry nonzero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YPoly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> YPoly<C> {
    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        YPoly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        if c.is_zero() {
            YPoly::zero()
        } else {
            YPoly { coeffs: vec![c] }
        }
    }

    /// The monomial c * y^k.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        YPoly { coeffs }
    }

    /// The variable itself.
    pub fn y() -> Self {
        YPoly::monomial(C::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = YPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Substitute y -> -y (equivalently switch between the y and q conventions).
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { c.clone().neg() } else { c.clone() })
            .collect();
        YPoly { coeffs }
    }

    /// Evaluate at an integer point.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Exact division in Z[y]; None if the quotient is not in Z[y].
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division of Z[y] by zero");
        if self.is_zero() {
            return Some(YPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return None;
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        let lead = divisor.coeffs.last().unwrap();
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            if !(top.clone() % lead.clone()).is_zero() {
                return None;
            }
            let q = top / lead.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = rem[i + j].clone() - q.clone() * dc.clone();
                rem[i + j] = t;
            }
            quot[i] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(YPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Exact division by an integer scalar; None if some coefficient is not divisible.
    pub fn exact_div_scalar(&self, s: &C) -> Option<Self> {
        assert!(!s.is_zero(), "division of Z[y] by zero scalar");
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !(c.clone() % s.clone()).is_zero() {
                return None;
            }
            coeffs.push(c.clone() / s.clone());
        }
        Some(YPoly { coeffs })
    }

    /// Exact quotient with rational coefficients; None only if divisor is zero-led
    /// remainder, i.e. the division leaves a remainder even over Q.
    pub fn div_rational(&self, divisor: &Self) -> Option<RatPoly<C>> {
        RatPoly::from_int(self).exact_div(&RatPoly::from_int(divisor))
    }

    /// Render with the given variable name; `negate` prints p(-v) instead of p(v).
    pub fn display(&self, var: &str, negate: bool) -> String {
        let p = if negate { self.negate_variable() } else { self.clone() };
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in p.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let unit_mag = mag.is_one();
            match (k, unit_mag) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push_str(var),
                (1, false) => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                    out.push_str(var);
                }
                (_, true) => {
                    out.push_str(var);
                    out.push_str(&format!("^{k}"));
                }
                (_, false) => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                    out.push_str(var);
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for YPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("y", false))
    }
}

impl<C: Coeff> fmt::Debug for YPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({self})")
    }
}

impl<C: Coeff> Add for &YPoly<C> {
    type Output = YPoly<C>;
    fn add(self, rhs: &YPoly<C>) -> YPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        YPoly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> AddAssign<&YPoly<C>> for YPoly<C> {
    fn add_assign(&mut self, rhs: &YPoly<C>) {
        *self = &*self + rhs;
    }
}

impl<C: Coeff> Sub for &YPoly<C> {
    type Output = YPoly<C>;
    fn sub(self, rhs: &YPoly<C>) -> YPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        YPoly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Mul for &YPoly<C> {
    type Output = YPoly<C>;
    fn mul(self, rhs: &YPoly<C>) -> YPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = coeffs[i + j].clone() + a.clone() * b.clone();
                coeffs[i + j] = t;
            }
        }
        YPoly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Neg for &YPoly<C> {
    type Output = YPoly<C>;
    fn neg(self) -> YPoly<C> {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| c.clone().neg()).collect(),
        }
    }
}

/// Polynomial in one variable with rational coefficients; the value type of
/// limits at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly<C: Coeff> {
    coeffs: Vec<Ratio<C>>,
}

impl<C: Coeff> RatPoly<C> {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_int(p: &YPoly<C>) -> Self {
        RatPoly {
            coeffs: p.coeffs.iter().map(|c| Ratio::from_integer(c.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Ratio<C>] {
        &self.coeffs
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Exact division over Q[y]; None if a nonzero remainder is left.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division of Q[y] by zero");
        if self.is_zero() {
            return Some(RatPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return None;
        }
        let mut quot = vec![Ratio::from_integer(C::zero()); rem.len() - dd];
        let lead = divisor.coeffs.last().unwrap().clone();
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd].clone() / lead.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = rem[i + j].clone() - q.clone() * dc.clone();
                rem[i + j] = t;
            }
            quot[i] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            let mut p = RatPoly { coeffs: quot };
            p.normalize();
            Some(p)
        } else {
            None
        }
    }

    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => format!("{c}"),
                1 => format!("{c}*{var}"),
                _ => format!("{c}*{var}^{k}"),
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}

impl<C: Coeff> fmt::Display for RatPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = YPoly<i64>;

    #[test]
    fn canonical_zero() {
        let p = P::from_coeffs(vec![0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p, P::zero());
    }

    #[test]
    fn arithmetic() {
        let p = &P::one() + &P::y(); // 1 + y
        let q = &p * &p;
        assert_eq!(q.coeffs(), &[1, 2, 1]);
        assert_eq!(&q - &q, P::zero());
    }

    #[test]
    fn exact_division() {
        let p = &P::one() + &P::y();
        let sq = &p * &p;
        assert_eq!(sq.exact_div(&p), Some(p.clone()));
        // 1 + y^2 is not divisible by 1 + y over Z
        let q = &P::one() + &P::monomial(1, 2);
        assert_eq!(q.exact_div(&p), None);
    }

    #[test]
    fn scalar_division() {
        let p = P::from_coeffs(vec![2, 4]);
        assert_eq!(p.exact_div_scalar(&2), Some(P::from_coeffs(vec![1, 2])));
        assert_eq!(p.exact_div_scalar(&3), None);
    }

    #[test]
    fn negate_variable_involution() {
        let p = P::from_coeffs(vec![1, -3, 5, 7]);
        assert_eq!(p.negate_variable().negate_variable(), p);
    }

    #[test]
    fn display_forms() {
        assert_eq!(P::from_coeffs(vec![1, 1]).to_string(), "1+y");
        assert_eq!(P::from_coeffs(vec![-1, 0, 1]).to_string(), "-1+y^2");
        assert_eq!(P::from_coeffs(vec![0, 2]).to_string(), "2*y");
        assert_eq!(P::from_coeffs(vec![0, -1]).to_string(), "-y");
        // q-display of 1 - y is 1 + q
        assert_eq!(P::from_coeffs(vec![1, -1]).display("q", true), "1+q");
    }
}
