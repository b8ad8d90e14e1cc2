//! Recursive-descent parser for the canonical text grammar.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := number ["/" number] | name ["^" ["-"] digits] | name "[" digits ("," digits)* "]" | "(" expr ")"
//! ```
//!
//! A `name` followed by `[` is an algebra generator; otherwise it must be a
//! variable of the table.

use super::{LaurentPoly, Rational, VarTable};
use crate::error::{Error, Result};

/// Values the grammar can build.
pub trait ParseTarget: Sized {
    fn scalar(p: LaurentPoly) -> Self;
    fn generator(vars: &VarTable, name: &str, idx: &[u32]) -> Result<Self>;
    fn add(self, other: Self) -> Self;
    fn mul(self, other: Self) -> Self;
    fn neg(self) -> Self;
}

impl ParseTarget for LaurentPoly {
    fn scalar(p: LaurentPoly) -> Self {
        p
    }
    fn generator(_: &VarTable, name: &str, _: &[u32]) -> Result<Self> {
        Err(Error::Parse(format!("generator {name}[..] in a scalar expression")))
    }
    fn add(self, other: Self) -> Self {
        &self + &other
    }
    fn mul(self, other: Self) -> Self {
        &self * &other
    }
    fn neg(self) -> Self {
        -&self
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    vars: &'a VarTable,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at byte {}", self.pos)))
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn expr<T: ParseTarget>(&mut self) -> Result<T> {
        let neg = self.eat(b'-');
        let mut acc = self.term::<T>()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                acc = acc.add(self.term()?);
            } else if self.eat(b'-') {
                acc = acc.add(self.term::<T>()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<T: ParseTarget>(&mut self) -> Result<T> {
        let mut acc = self.factor::<T>()?;
        while self.eat(b'*') {
            acc = acc.mul(self.factor()?);
        }
        Ok(acc)
    }

    fn factor<T: ParseTarget>(&mut self) -> Result<T> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                let text = if self.eat(b'/') { format!("{n}/{}", self.digits()?) } else { n.to_string() };
                let r = Rational::parse(&text).ok_or_else(|| Error::Parse(format!("bad number {text}")))?;
                Ok(T::scalar(LaurentPoly::constant(self.vars, r)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                if self.s.get(self.pos) == Some(&b'[') {
                    self.pos += 1;
                    let mut idx = vec![self.digits()?.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?];
                    while self.eat(b',') {
                        idx.push(self.digits()?.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?);
                    }
                    if !self.eat(b']') {
                        return self.err("expected ']'");
                    }
                    return T::generator(self.vars, name, &idx);
                }
                let mut exp = 1i32;
                if self.eat(b'^') {
                    let neg = self.eat(b'-');
                    let d: i32 = self.digits()?.parse().map_err(|_| Error::Parse("exponent".into()))?;
                    exp = if neg { -d } else { d };
                }
                Ok(T::scalar(LaurentPoly::var_pow(self.vars, name, exp)?))
            }
            _ => self.err("unexpected input"),
        }
    }
}

/// Parses `text` in the canonical grammar over `vars`.
pub fn parse_expr<T: ParseTarget>(text: &str, vars: &VarTable) -> Result<T> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, vars };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

impl LaurentPoly {
    pub fn parse(text: &str, vars: &VarTable) -> Result<Self> {
        parse_expr(text, vars)
    }
}
