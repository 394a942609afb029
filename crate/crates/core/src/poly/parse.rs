//! Parser for the human-readable polynomial syntax used in text output.
//!
//! Grammar (juxtaposition is multiplication):
//!
//! ```text
//! expr   := ['-'|'+'] term (('+'|'-') term)*
//! term   := power (['*'|'/'] power | power)*
//! power  := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{MultiPoly, Rational, Var, VarSet};
use crate::error::{Error, Result};

pub fn parse_poly(vars: VarSet, input: &str) -> Result<MultiPoly> {
    let mut p = Parser {
        vars,
        input,
        chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    vars: VarSet,
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.signed()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.signed()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.signed()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn signed(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.signed()?)
            }
            Some('+') => {
                self.pos += 1;
                self.signed()
            }
            _ => self.term(),
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    let c = d
                        .constant_value()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| self.err("division by a non-constant or zero"))?;
                    acc = acc.scale(&c.recip());
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let n = self.integer()?;
            let n: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MultiPoly::constant(self.vars, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let v = Var::from_name(&c.to_string())
                    .filter(|v| self.vars.contains(*v))
                    .ok_or_else(|| self.err("unknown variable"))?;
                self.pos += 1;
                Ok(MultiPoly::var(self.vars, v))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}
