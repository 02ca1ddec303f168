//! Parser for the coefficient syntax produced by `Display for Scalar`.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{Monomial, Poly, Var};
use super::Scalar;
use crate::error::Error;

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
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
        Error::Parse(format!("{what} at offset {} in coefficient {:?}", self.pos, self.src))
    }

    fn int(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn var_power(&mut self) -> Result<Option<Monomial>, Error> {
        let Some(v) = self.peek().and_then(Var::from_symbol) else {
            return Ok(None);
        };
        self.pos += 1;
        let e = if self.eat('^') {
            let n = self.int().ok_or_else(|| self.err("expected exponent"))?;
            u32::try_from(n).map_err(|_| self.err("exponent out of range"))?
        } else {
            1
        };
        Ok(Some(Monomial::var(v, e)))
    }

    /// Unsigned term: `int`, `int*monos` or `monos`.
    fn term(&mut self) -> Result<(Monomial, BigInt), Error> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::ONE;
        if let Some(n) = self.int() {
            coeff = n;
            if !self.eat('*') {
                return Ok((mono, coeff));
            }
        }
        loop {
            match self.var_power()? {
                Some(m) => mono = mono.mul(&m),
                None => return Err(self.err("expected variable")),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok((mono, coeff))
    }

    fn poly(&mut self) -> Result<Poly, Error> {
        let mut terms = Vec::new();
        let mut neg = self.eat('-');
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { -c } else { c }));
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(Poly::from_terms(terms))
    }

    fn atom(&mut self) -> Result<Poly, Error> {
        if self.eat('(') {
            let p = self.poly()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            Ok(p)
        } else {
            let neg = self.eat('-');
            let (m, c) = self.term()?;
            Ok(Poly::monomial(m, if neg { -c } else { c }))
        }
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let mut cur = Cursor { chars: s.trim().chars().collect(), pos: 0, src: s };
    let num = cur.atom()?;
    let den = if cur.eat('/') { cur.atom()? } else { Poly::one() };
    if cur.pos != cur.chars.len() {
        return Err(cur.err("trailing input"));
    }
    Scalar::from_fraction(num, den)
}
