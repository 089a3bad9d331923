//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! poly     := term (('+'|'-') term)* ;
//! term     := [coef '*'] factor ('*' factor)* ;
//! coef     := int ['/' int] ;
//! factor   := var | '(' poly ')' | '[' poly ',' poly ']' | 'st(' int ';' parities ')' ;
//! var      := ('y'|'z'|'x') int ;
//! parities := ('y'|'z'|'x') (',' ('y'|'z'|'x'))* ;
//! ```
//!
//! Whitespace is insignificant, `[a,b]` is the commutator `ab - ba`, and
//! `st(d; ...)` expands to the standard polynomial of degree `d` in fresh
//! variables `1..=d`. A leading `-` on any term and the literal `0` are
//! accepted so that rendering round-trips; rational coefficients mirror
//! the exact coefficients a report may carry.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Parity;
use crate::error::{Error, Result};
use crate::poly::{standard_poly, Signature, StarPolynomial, VarRef};
use crate::rat::Rat;

/// Largest degree `st(d; ...)` expands at parse time (`d!` terms).
pub const MAX_STANDARD_EXPANSION: usize = 8;

/// Parses the grammar above into a canonical polynomial.
pub fn parse_polynomial(text: &str) -> Result<StarPolynomial> {
    let mut p = Parser { text: text.as_bytes(), pos: 0 };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(&format!("expected `{}`", c as char))),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as BigInt"))
    }

    fn poly(&mut self) -> Result<StarPolynomial> {
        let mut acc = StarPolynomial::zero();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<StarPolynomial> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let numer = self.uint()?;
            let denom = if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.uint()?;
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            if self.peek() != Some(b'*') {
                // Allow the literal 0 so the rendering of the zero
                // polynomial parses back.
                if numer.is_zero() {
                    return Ok(StarPolynomial::zero());
                }
                return Err(self.err("a coefficient must be followed by `*` and a factor"));
            }
            self.pos += 1;
            Rat::new(numer, denom)
        } else {
            Rat::one()
        };
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc.scale(&coeff))
    }

    fn factor(&mut self) -> Result<StarPolynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let lhs = self.poly()?;
                self.expect(b',')?;
                let rhs = self.poly()?;
                self.expect(b']')?;
                Ok(lhs.commutator(&rhs))
            }
            Some(b's') => self.standard(),
            Some(c) if Parity::from_letter(c as char).is_some() => {
                let parity = Parity::from_letter(self.bump().expect("peeked") as char).expect("checked");
                let index = self.uint()?;
                if index.is_zero() {
                    return Err(self.err("variable index 0 is rejected; indices start at 1"));
                }
                let index: u32 = index
                    .try_into()
                    .map_err(|_| self.err("variable index too large"))?;
                Ok(StarPolynomial::variable(VarRef::new(index, parity)))
            }
            _ => Err(self.err("expected a variable, `(`, `[` or `st(`")),
        }
    }

    fn standard(&mut self) -> Result<StarPolynomial> {
        self.expect(b's')?;
        self.expect(b't')?;
        self.expect(b'(')?;
        let degree = self.uint()?;
        let degree: usize = degree.try_into().map_err(|_| self.err("degree too large"))?;
        if degree == 0 {
            return Err(self.err("standard polynomial degree must be >= 1"));
        }
        // st(d; ...) expands to d! terms; past this the expansion is out
        // of reach and the min-degree search (which never materializes
        // the polynomial) is the right tool.
        if degree > MAX_STANDARD_EXPANSION {
            return Err(self.err(&format!(
                "st({degree}; ...) would expand to {degree}! terms; degrees above \
                 {MAX_STANDARD_EXPANSION} are not expanded (use min-degree instead)"
            )));
        }
        self.expect(b';')?;
        let mut parities = Vec::new();
        loop {
            let c = self.bump();
            match c.and_then(|c| Parity::from_letter(c as char)) {
                Some(p) => parities.push(p),
                None => {
                    if c.is_some() {
                        self.pos -= 1;
                    }
                    return Err(self.err("expected a parity letter (y, z or x)"));
                }
            }
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.err("expected `,` or `)` in st(...)")),
            }
        }
        if parities.len() != degree {
            return Err(self.err(&format!(
                "st({degree}; ...) needs exactly {degree} parities, got {}",
                parities.len()
            )));
        }
        Ok(standard_poly(&Signature::new(parities)))
    }
}
