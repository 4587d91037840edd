//! Parser for the canonical polynomial text form, inverse of
//! `LaurentPolynomial::canonical_string`.

use crate::coeff::Coeff;
use crate::poly::{LaurentPolynomial, Monomial};
use crate::vars::VariableTable;
use crate::ypoly::YPoly;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", b as char))
        }
    }

    fn eat_str(&mut self, t: &str) -> bool {
        if self.s[self.pos..].starts_with(t.as_bytes()) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let start = self.pos;
        while self.peek().map_or(false, |b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let v: i64 = digits
            .parse()
            .map_err(|e| ParseError { pos: start, msg: format!("{e}") })?;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while self
            .peek()
            .map_or(false, |b| b.is_ascii_alphanumeric() || b == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected identifier");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

/// Parse a Z[y] coefficient body, e.g. `1+y`, `-1+2*y^3`, `0`.
fn parse_ypoly<C: Coeff>(c: &mut Cursor) -> Result<YPoly<C>, ParseError> {
    let mut acc = YPoly::zero();
    let mut first = true;
    loop {
        let sign = if c.eat_str("-") {
            -1i64
        } else if c.eat_str("+") {
            1
        } else if first {
            1
        } else {
            break;
        };
        first = false;
        // term: INT | INT*y | INT*y^K | y | y^K
        let (mag, has_var) = if c.peek().map_or(false, |b| b.is_ascii_digit()) {
            let v = c.integer()?;
            (v, c.eat_str("*y"))
        } else if c.eat_str("y") {
            (1, true)
        } else {
            return c.err("expected coefficient term");
        };
        let k = if has_var {
            if c.eat_str("^") {
                let e = c.integer()?;
                if e < 0 {
                    return c.err("negative y exponent");
                }
                e as usize
            } else {
                1
            }
        } else {
            0
        };
        acc = &acc + &YPoly::monomial(C::from(sign * mag), k);
    }
    Ok(acc)
}

/// Parse the canonical polynomial form over the given table.
pub fn parse_polynomial<C: Coeff>(
    input: &str,
    table: &Arc<VariableTable>,
) -> Result<LaurentPolynomial<C>, ParseError> {
    let mut c = Cursor::new(input.trim());
    if c.s == b"0" {
        return Ok(LaurentPolynomial::zero(table));
    }
    let mut out = LaurentPolynomial::zero(table);
    loop {
        c.eat(b'(')?;
        let coeff = parse_ypoly::<C>(&mut c)?;
        c.eat(b')')?;
        let mut exps = vec![0i64; table.arity()];
        while c.eat_str("*") {
            let name_pos = c.pos;
            let name = c.ident()?;
            let idx = table.index_of(name).ok_or_else(|| ParseError {
                pos: name_pos,
                msg: format!("unknown variable `{name}`"),
            })?;
            c.eat(b'^')?;
            exps[idx] += c.integer()?;
        }
        out = &out + &LaurentPolynomial::term(table, Monomial::new(exps), coeff);
        if !c.eat_str(" + ") {
            break;
        }
    }
    if c.pos != c.s.len() {
        return c.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VariableTable;

    type P = LaurentPolynomial<i64>;

    #[test]
    fn round_trip() {
        let t = VariableTable::flat(vec!["a1", "b1"]);
        let cases = [
            "0",
            "(1)",
            "(1+y)*a1^1*b1^-1",
            "(-1)*a1^-1 + (1) + (2*y^2)*b1^3",
            "(-1+y^2)",
        ];
        for s in cases {
            let p: P = parse_polynomial(s, &t).unwrap();
            assert_eq!(p.canonical_string(), s, "round trip of {s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        let t = VariableTable::flat(vec!["a"]);
        assert!(parse_polynomial::<i64>("(1)*c^2", &t).is_err());
        assert!(parse_polynomial::<i64>("1+y", &t).is_err());
        assert!(parse_polynomial::<i64>("(1) junk", &t).is_err());
    }

    #[test]
    fn canonical_merge() {
        // repeated monomials merge; parse result re-serializes canonically
        let t = VariableTable::flat(vec!["a"]);
        let p: P = parse_polynomial("(1)*a^1 + (2)*a^1", &t).unwrap();
        assert_eq!(p.canonical_string(), "(3)*a^1");
    }
}
