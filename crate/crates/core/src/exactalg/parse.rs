//! Small recursive-descent parser for expressions in `q`, `t` and `X`.
//!
//! Grammar: sums and differences of products and quotients of powers, with
//! integer literals, parentheses, unary minus and integer exponents
//! (`q^-2`, `(1-t)^3`).

use num_bigint::BigInt;

use super::laurent_qt::LaurentQT;
use super::laurent_x::LaurentX;
use super::ratqt::RatQT;
use crate::error::{Error, Result};

/// Values the parser can build.
pub trait ParseRing: Sized + Clone {
    fn from_int(c: BigInt) -> Self;
    fn var(name: &str) -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;
    fn pow(&self, e: i64) -> Result<Self>;
}

impl ParseRing for RatQT {
    fn from_int(c: BigInt) -> Self {
        RatQT::from_bigint(c)
    }
    fn var(name: &str) -> Option<Self> {
        match name {
            "q" => Some(RatQT::q()),
            "t" => Some(RatQT::t()),
            _ => None,
        }
    }
    fn add(&self, o: &Self) -> Self {
        RatQT::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatQT::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatQT::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        RatQT::div(self, o)
    }
    fn pow(&self, e: i64) -> Result<Self> {
        RatQT::pow(self, e)
    }
}

impl ParseRing for LaurentX {
    fn from_int(c: BigInt) -> Self {
        LaurentX::constant(RatQT::from_bigint(c))
    }
    fn var(name: &str) -> Option<Self> {
        match name {
            "X" | "x" => Some(LaurentX::monomial(1, RatQT::one())),
            _ => RatQT::var(name).map(LaurentX::constant),
        }
    }
    fn add(&self, o: &Self) -> Self {
        LaurentX::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LaurentX::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentX::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        match o.as_monomial() {
            Some((k, c)) => Ok(self.scale(&c.inv()?).shift(-k)),
            None => LaurentX::exact_divide(self, o),
        }
    }
    fn pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            let mut r = LaurentX::constant(RatQT::one());
            for _ in 0..e {
                r = r.mul(self);
            }
            return Ok(r);
        }
        match self.as_monomial() {
            Some((k, c)) => Ok(LaurentX::monomial(k * e, c.pow(e)?)),
            None => Err(Error::Parse("negative power of a non-monomial".into())),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at offset {}", self.i)))
    }

    fn expr<R: ParseRing>(&mut self) -> Result<R> {
        let mut acc: R = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.i += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.i += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<R: ParseRing>(&mut self) -> Result<R> {
        let mut acc: R = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.i += 1;
                    acc = acc.mul(&self.unary()?);
                }
                b'/' => {
                    self.i += 1;
                    acc = acc.div(&self.unary()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary<R: ParseRing>(&mut self) -> Result<R> {
        match self.peek() {
            Some(b'-') => {
                self.i += 1;
                let v: R = self.unary()?;
                Ok(R::from_int(BigInt::from(0)).sub(&v))
            }
            Some(b'+') => {
                self.i += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power<R: ParseRing>(&mut self) -> Result<R> {
        let base: R = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let e = self.exponent()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.exponent()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.i += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.i += 1;
                Ok(-self.exponent()?)
            }
            Some(b'+') => {
                self.i += 1;
                self.exponent()
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits();
                n.parse::<i64>().or_else(|_| self.err("exponent out of range"))
            }
            _ => self.err("expected exponent"),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.i]).into_owned()
    }

    fn atom<R: ParseRing>(&mut self) -> Result<R> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.i += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad integer {d}")))?;
                Ok(R::from_int(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_alphanumeric() {
                    self.i += 1;
                }
                let name = String::from_utf8_lossy(&self.s[start..self.i]).into_owned();
                match R::var(&name) {
                    Some(v) => Ok(v),
                    None => Err(Error::Parse(format!("unknown symbol '{name}'"))),
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse<R: ParseRing>(src: &str) -> Result<R> {
    let mut p = Parser { s: src.as_bytes(), i: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a rational function in `q` and `t`.
pub fn try_parse_ratqt(src: &str) -> Result<RatQT> {
    parse(src)
}

/// Parses a rational function in `q` and `t`, panicking on bad input.
///
/// Intended for literals in tests and examples.
pub fn parse_ratqt(src: &str) -> RatQT {
    try_parse_ratqt(src).unwrap_or_else(|e| panic!("{src}: {e}"))
}

/// Parses an integer Laurent polynomial in `q` and `t`, panicking on bad input.
pub fn parse_laurent_qt(src: &str) -> LaurentQT {
    let v = parse_ratqt(src);
    v.as_laurent().cloned().unwrap_or_else(|| panic!("{src} is not a Laurent polynomial"))
}

/// Parses a Laurent polynomial in `X` with coefficients in ℚ(q, t).
pub fn try_parse_laurent_x(src: &str) -> Result<LaurentX> {
    parse(src)
}

pub fn parse_laurent_x(src: &str) -> LaurentX {
    try_parse_laurent_x(src).unwrap_or_else(|e| panic!("{src}: {e}"))
}
