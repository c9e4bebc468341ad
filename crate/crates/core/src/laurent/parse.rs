//! Text grammar for Laurent polynomials:
//!
//! ```text
//! poly  := term (('+' | '-') term)*      with an optional leading sign
//! term  := coeff | [coeff '*'] 'q' ['^' int]
//! coeff := int | int '/' int
//! ```
//!
//! Whitespace between tokens is ignored; repeated exponents are summed.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;
use super::LaurentPoly;
use crate::error::{Error, Result};

struct Scanner<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.pos), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at position {} in polynomial {:?}",
            self.pos, self.src
        ))
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn signed_int(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        if paren && !self.eat(')') {
            return Err(self.err("expected ')'"));
        }
        let v = i64::try_from(v).map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn term(&mut self) -> Result<(i64, Rational)> {
        let coeff = match self.digits() {
            Some(n) => {
                let d = if self.eat('/') {
                    self.digits().ok_or_else(|| self.err("expected denominator"))?
                } else {
                    BigInt::one()
                };
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                let c = Rational::new(n, d);
                if !self.eat('*') {
                    return Ok((0, c));
                }
                c
            }
            None => Rational::one(),
        };
        if !self.eat('q') {
            return Err(self.err("expected 'q'"));
        }
        let e = if self.eat('^') { self.signed_int()? } else { 1 };
        Ok((e, coeff))
    }
}

pub(crate) fn parse_laurent(src: &str) -> Result<LaurentPoly> {
    let mut sc = Scanner::new(src);
    if sc.peek().is_none() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = LaurentPoly::zero();
    let mut first = true;
    while sc.peek().is_some() {
        let neg = if sc.eat('-') {
            true
        } else if sc.eat('+') || first {
            false
        } else {
            return Err(sc.err("expected '+' or '-'"));
        };
        first = false;
        let (e, c) = sc.term()?;
        out.add_term(e, if neg { -c } else { c });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rational::{int, ratio};

    #[test]
    fn parses_the_documented_example() {
        let p = parse_laurent("q^2+3*q-1-2*q^-1").unwrap();
        assert_eq!(p.coeff(2), int(1));
        assert_eq!(p.coeff(1), int(3));
        assert_eq!(p.coeff(0), int(-1));
        assert_eq!(p.coeff(-1), int(-2));
        assert_eq!(p.num_terms(), 4);
    }

    #[test]
    fn accepts_whitespace_fractions_and_parenthesized_exponents() {
        let p = parse_laurent(" -1/2 * q^(-3) + q + q ").unwrap();
        assert_eq!(p.coeff(-3), ratio(-1, 2));
        assert_eq!(p.coeff(1), int(2));
        assert_eq!(parse_laurent("0").unwrap(), LaurentPoly::zero());
        assert_eq!(parse_laurent("q-q").unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "q^", "2q", "q**2", "x+1", "1/0*q", "q^2 3", "+-q", "q^1.5"] {
            assert!(parse_laurent(bad).is_err(), "accepted {bad:?}");
        }
    }
}
