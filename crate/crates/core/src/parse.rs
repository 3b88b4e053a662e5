//! Text grammar for polynomials, shared by the CLI and test fixtures.
//!
//! Variables are `x0..xN`; for rings with at most four variables the aliases
//! `x, y, z, w` are also accepted. Coefficients are integers or rationals
//! (`3`, `-2/5`), `^` raises to a power, `*` between factors is optional.
//! Example: `y^2*z - x^2*z - x^3`. Parsing is exact.

use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, RatPoly};
use crate::Rat;

/// Parse an exact rational from decimal `p` or `p/q` notation.
pub fn parse_rational(src: &str) -> Result<Rat> {
    let src = src.trim();
    let err = |message: &str| Error::Parse {
        position: 0,
        message: message.to_string(),
    };
    let (num, den) = match src.split_once('/') {
        None => (src, "1"),
        Some((n, d)) => (n, d),
    };
    let num: BigInt = num
        .trim()
        .parse()
        .map_err(|_| err("expected an integer numerator"))?;
    let den: BigInt = den
        .trim()
        .parse()
        .map_err(|_| err("expected an integer denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rat::new(num, den))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a digit"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    /// `p` or `p/q`.
    fn rational(&mut self) -> Result<Rat> {
        let num = self.integer()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rat::new(num, den))
        } else {
            Ok(Rat::from_integer(num))
        }
    }

    /// Variable name: `xK`, or one of the aliases `x y z w` when in range.
    fn variable(&mut self) -> Result<usize> {
        let c = self.bump().ok_or_else(|| self.error("expected a variable"))?;
        if !c.is_ascii_alphabetic() {
            return Err(self.error("expected a variable name"));
        }
        let has_digit = self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit());
        let index = if c == b'x' && has_digit {
            let n = self.integer()?;
            let idx: usize = n
                .to_string()
                .parse()
                .map_err(|_| self.error("variable index too large"))?;
            idx
        } else {
            match c {
                b'x' => 0,
                b'y' => 1,
                b'z' => 2,
                b'w' => 3,
                _ => return Err(self.error("unknown variable; use x0..xN or x,y,z,w")),
            }
        };
        if index >= self.nvars {
            return Err(self.error("variable index out of range for this ring"));
        }
        Ok(index)
    }

    /// A product of factors: optional coefficient and variable powers,
    /// with `*` optional between factors.
    fn term(&mut self) -> Result<RatPoly> {
        let mut coeff = Rat::one();
        let mut exponents = alloc::vec![0u32; self.nvars];
        let mut saw_factor = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.rational()?;
                    saw_factor = true;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let idx = self.variable()?;
                    let exp = if self.peek() == Some(b'^') {
                        self.bump();
                        let e = self.integer()?;
                        u32::try_from(e.to_string().parse::<u64>().map_err(|_| {
                            self.error("exponent too large")
                        })?)
                        .map_err(|_| self.error("exponent too large"))?
                    } else {
                        1
                    };
                    exponents[idx] += exp;
                    saw_factor = true;
                }
                Some(b'*') => {
                    self.bump();
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(self.error("expected a coefficient or variable"));
        }
        Ok(RatPoly::from_terms(
            self.nvars,
            [(Monomial::new(exponents), coeff)],
        ))
    }

    fn expression(&mut self) -> Result<RatPoly> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.bump();
                negate = true;
            }
            Some(b'+') => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                b'-' => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Err(self.error("expected '+' or '-'")),
            }
        }
        Ok(acc)
    }
}

/// Parse a polynomial in a ring with `nvars` variables.
pub fn parse_poly(src: &str, nvars: usize) -> Result<RatPoly> {
    let mut parser = Parser {
        src: src.as_bytes(),
        pos: 0,
        nvars,
    };
    parser.skip_ws();
    if parser.src[parser.pos..].is_empty() {
        return Err(parser.error("empty input"));
    }
    // allow a literal "0"
    let poly = parser.expression()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(poly)
}
