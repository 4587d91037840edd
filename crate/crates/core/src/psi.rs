//! Shared psi-factor kernel for weight functions.
//!
//! Both the flag and matrix weight functions are products of the same three
//! kinds of factors in a ratio xi of two variables; which one applies is
//! decided by an index comparison in the caller.

use crate::coeff::Coeff;
use crate::poly::{LaurentPolynomial, Monomial};
use crate::vars::VariableTable;
use crate::ypoly::YPoly;
use std::cmp::Ordering;
use std::sync::Arc;

/// The factor at xi = (numerator variable)/(denominator variable):
/// `Less` -> 1 - xi, `Equal` -> (1+y)*xi, `Greater` -> 1 + y*xi.
pub fn psi_factor<C: Coeff>(
    table: &Arc<VariableTable>,
    case: Ordering,
    num_var: usize,
    den_var: usize,
) -> LaurentPolynomial<C> {
    let arity = table.arity();
    let mut exps = vec![0i64; arity];
    exps[num_var] += 1;
    exps[den_var] -= 1;
    let xi = Monomial::new(exps);
    match case {
        Ordering::Less => {
            &LaurentPolynomial::one(table) - &LaurentPolynomial::monomial(table, xi)
        }
        Ordering::Equal => {
            LaurentPolynomial::term(table, xi, &YPoly::one() + &YPoly::y())
        }
        Ordering::Greater => {
            &LaurentPolynomial::one(table) + &LaurentPolynomial::term(table, xi, YPoly::y())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cases() {
        let t = VariableTable::flat(vec!["a", "b"]);
        let less: LaurentPolynomial<i64> = psi_factor(&t, Ordering::Less, 0, 1);
        assert_eq!(less.canonical_string(), "(1) + (-1)*a^1*b^-1");
        let eq: LaurentPolynomial<i64> = psi_factor(&t, Ordering::Equal, 0, 1);
        assert_eq!(eq.canonical_string(), "(1+y)*a^1*b^-1");
        let gt: LaurentPolynomial<i64> = psi_factor(&t, Ordering::Greater, 0, 1);
        assert_eq!(gt.canonical_string(), "(1) + (y)*a^1*b^-1");
    }
}
