//! Text form of polynomials.
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)? | '(' poly ')'
//! var    := 'x' uint            (1-based)
//! coeff  := int ('/' uint)?
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::Rational;
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses `text` as a polynomial in `nvars` variables.
pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses `text`, taking the variable count from the largest index that appears.
pub fn parse_infer(text: &str) -> Result<Polynomial> {
    parse(text, max_var_index(text))
}

fn max_var_index(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let start = i + 1;
            let mut j = start;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(v) = text[start..j].parse::<usize>() {
                best = best.max(v);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("digits parse"))
    }

    fn small_uint(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.uint()?;
        u32::try_from(v).map_err(|_| Error::Parse {
            pos: start,
            msg: "integer too large".into(),
        })
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = if sign { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.uint()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                Polynomial::constant(self.nvars, Rational::new(num, den))
            }
            _ => self.factor()?,
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let at = self.pos;
                let idx = self.small_uint()? as usize;
                if idx == 0 || idx > self.nvars {
                    return Err(Error::Parse {
                        pos: at,
                        msg: format!("variable x{idx} outside 1..={}", self.nvars),
                    });
                }
                let mut e = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    e = self.small_uint()?;
                }
                let mut exps = vec![0u32; self.nvars];
                exps[idx - 1] = e;
                Ok(Polynomial::monomial(Monomial::new(&exps)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let e = self.small_uint()?;
                    return Ok(inner.pow(e));
                }
                Ok(inner)
            }
            Some(_) => Err(self.err("expected variable or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
