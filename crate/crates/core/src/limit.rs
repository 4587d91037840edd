//! Limit of a one-variable rational expression at xi -> infinity.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::rational::RationalExpression;
use crate::ypoly::{RatPoly, YPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitValue<C: Coeff> {
    Finite(RatPoly<C>),
    Infinite,
}

/// Compare leading xi-degrees of numerator and expanded denominator:
/// lower -> 0, equal -> ratio of the leading Z[y] coefficients (which must
/// divide exactly over Q[y]), higher -> Infinite.
pub fn limit_at_infinity<C: Coeff>(h: &RationalExpression<C>) -> Result<LimitValue<C>> {
    assert_eq!(h.table().arity(), 1, "limit requires a one-variable table");
    if h.is_zero() {
        return Ok(LimitValue::Finite(RatPoly::zero()));
    }
    let den = h.denominator_product();
    let (dn, ln) = leading(h.numerator());
    let (dd, ld) = leading(&den);
    if dn < dd {
        return Ok(LimitValue::Finite(RatPoly::zero()));
    }
    if dn > dd {
        return Ok(LimitValue::Infinite);
    }
    let ratio = ln
        .div_rational(&ld)
        .ok_or_else(|| Error::InexactDivisor(ld.to_string()))?;
    Ok(LimitValue::Finite(ratio))
}

fn leading<C: Coeff>(p: &crate::poly::LaurentPolynomial<C>) -> (i64, YPoly<C>) {
    p.terms()
        .last()
        .map(|(m, c)| (m.exponents()[0], c.clone()))
        .expect("leading term of zero polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{LaurentPolynomial, Monomial};
    use crate::vars::VariableTable;
    use num_rational::Ratio;

    type P = LaurentPolynomial<i64>;
    type R = RationalExpression<i64>;

    fn xi() -> std::sync::Arc<VariableTable> {
        VariableTable::flat(vec!["xi"])
    }

    #[test]
    fn ratio_of_leaders() {
        // (1 + y*xi)/(1 - xi) -> -y
        let t = xi();
        let num = &P::one(&t) + &P::term(&t, Monomial::var(1, 0), YPoly::y());
        let den = &P::one(&t) - &P::var(&t, 0);
        let lim = limit_at_infinity(&R::new(num, vec![den])).unwrap();
        match lim {
            LimitValue::Finite(p) => {
                assert_eq!(p.coeffs(), &[Ratio::new(0, 1), Ratio::new(-1, 1)])
            }
            LimitValue::Infinite => panic!("expected finite"),
        }
    }

    #[test]
    fn lower_degree_vanishes() {
        // (1 + y/xi)/(1 - 1/xi) -> 1
        let t = xi();
        let num = &P::one(&t) + &P::term(&t, Monomial::var_pow(1, 0, -1), YPoly::y());
        let den = &P::one(&t) - &P::monomial(&t, Monomial::var_pow(1, 0, -1));
        let lim = limit_at_infinity(&R::new(num, vec![den])).unwrap();
        assert_eq!(
            lim,
            LimitValue::Finite(RatPoly::from_int(&YPoly::one()))
        );
    }

    #[test]
    fn constants_and_infinity() {
        let t = xi();
        let c = R::from_poly(P::constant(&t, YPoly::from_coeffs(vec![5])));
        assert_eq!(
            limit_at_infinity(&c).unwrap(),
            LimitValue::Finite(RatPoly::from_int(&YPoly::from_coeffs(vec![5])))
        );
        let up = R::new(P::var(&t, 0), vec![P::one(&t)]);
        assert_eq!(limit_at_infinity(&up).unwrap(), LimitValue::Infinite);
        let down = R::new(
            P::monomial(&t, Monomial::var_pow(1, 0, -2)),
            vec![P::one(&t)],
        );
        assert_eq!(
            limit_at_infinity(&down).unwrap(),
            LimitValue::Finite(RatPoly::zero())
        );
    }
}
