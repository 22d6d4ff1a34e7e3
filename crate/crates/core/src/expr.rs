//! Parser for exact scalar expressions as they appear on the command line
//! and in serialized form.
//!
//! Grammar: integers, decimals, fractions via `/`, `sqrt(...)` of a
//! rational, the four arithmetic operators with parentheses, and
//! `root(poly, [lo, hi])` naming the unique root of an integer polynomial
//! in a bracket. Everything evaluates exactly; values never leave the
//! rational/surd/algebraic tower, and expressions that would (nested
//! radicals, mixed radicands) are rejected.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{rat, real_root_in, IntPoly, Int, Rat, Scalar};

pub fn parse_scalar(input: &str) -> Result<Scalar> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let value = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            reason: reason.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn parse_expr(&mut self) -> Result<Scalar> {
        let mut acc = self.parse_term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.parse_term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.parse_term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(&mut self) -> Result<Scalar> {
        let mut acc = self.parse_factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.parse_factor()?)?;
            } else if self.eat(b'/') {
                acc = acc.div(&self.parse_factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Scalar> {
        if self.eat(b'-') {
            return Ok(self.parse_factor()?.neg());
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<Scalar> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from_rat(self.parse_number()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let word = self.parse_word();
                match word.as_str() {
                    "sqrt" => {
                        self.expect(b'(')?;
                        let inner = self.parse_expr()?;
                        self.expect(b')')?;
                        match inner {
                            Scalar::Rat(_) => inner.sqrt(),
                            _ => Err(Error::Domain(
                                "sqrt requires a rational radicand; nested radicals are not supported"
                                    .into(),
                            )),
                        }
                    }
                    "root" => self.parse_root(),
                    other => Err(self.err(&format!("unknown function {:?}", other))),
                }
            }
            _ => Err(self.err("expected a number, 'sqrt(...)', 'root(...)', or '('")),
        }
    }

    fn parse_word(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn parse_uint(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<Int>()
            .map_err(|e| self.err(&format!("bad integer: {}", e)))
    }

    /// Unsigned number with an optional decimal part; fractions arrive via
    /// the '/' operator one level up.
    fn parse_number(&mut self) -> Result<Rat> {
        let int_part = self.parse_uint()?;
        if self.peek() != Some(b'.') {
            return Ok(rat(int_part));
        }
        self.pos += 1;
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = self.pos - start;
        if digits == 0 {
            return Err(self.err("expected digits after decimal point"));
        }
        let frac = std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<Int>()
            .map_err(|e| self.err(&format!("bad number: {}", e)))?;
        let scale = Int::from(10).pow(digits as u32);
        Ok(Rat::new(int_part * &scale + frac, scale))
    }

    fn parse_signed_number(&mut self) -> Result<Rat> {
        let neg = self.eat(b'-');
        let mut n = self.parse_number()?;
        if self.eat(b'/') {
            let d = self.parse_number()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            n /= d;
        }
        Ok(if neg { -n } else { n })
    }

    fn parse_root(&mut self) -> Result<Scalar> {
        self.expect(b'(')?;
        let poly = self.parse_poly()?;
        self.expect(b',')?;
        self.expect(b'[')?;
        let lo = self.parse_signed_number()?;
        self.expect(b',')?;
        let hi = self.parse_signed_number()?;
        self.expect(b']')?;
        self.expect(b')')?;
        real_root_in(&poly, &lo, &hi)
    }

    /// Integer polynomial in x, e.g. `x^4-14x^2+9` (with or without '*'
    /// between coefficient and variable).
    fn parse_poly(&mut self) -> Result<IntPoly> {
        let mut terms: Vec<(Int, usize)> = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = if self.eat(b'-') {
                -1
            } else if self.eat(b'+') || first {
                1
            } else {
                break;
            };
            first = false;
            self.skip_ws();
            let coeff = if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.parse_uint()?
            } else {
                Int::from(1)
            };
            self.eat(b'*');
            self.skip_ws();
            let degree = if self.peek() == Some(b'x') {
                self.pos += 1;
                if self.eat(b'^') {
                    let e = self.parse_uint()?;
                    usize::try_from(e).map_err(|_| self.err("exponent too large"))?
                } else {
                    1
                }
            } else {
                0
            };
            terms.push((coeff * Int::from(sign), degree));
        }
        if terms.is_empty() {
            return Err(self.err("expected a polynomial"));
        }
        let top = terms.iter().map(|&(_, d)| d).max().unwrap();
        let mut coeffs = vec![Int::from(0); top + 1];
        for (c, d) in terms {
            coeffs[d] += c;
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}
