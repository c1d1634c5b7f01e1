//! Text form of polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | VAR | 'i' | '(' expr ')'
//! ```
//!
//! There is no implicit multiplication; `2x` is a syntax error.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};

use super::{Monomial, MultiPoly, Vars};

/// Parse `text` as a polynomial over the variable list `vars`.
pub fn parse_poly<K: Field>(text: &str, vars: &Vars) -> Result<MultiPoly<K>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.error("empty input"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
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

    fn expr<K: Field>(&mut self) -> Result<MultiPoly<K>> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<K: Field>(&mut self) -> Result<MultiPoly<K>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary<K: Field>(&mut self) -> Result<MultiPoly<K>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power<K: Field>(&mut self) -> Result<MultiPoly<K>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a nonnegative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                offset: start,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom<K: Field>(&mut self) -> Result<MultiPoly<K>> {
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        if c.is_ascii_digit() {
            let n: BigInt = self.digits().parse().unwrap();
            let mut value = Rational::from_integer(n);
            // `p/q` literal: the slash must follow the digits directly
            if self.src.get(self.pos) == Some(&b'/') {
                self.pos += 1;
                let start = self.pos;
                let d = self.digits();
                if d.is_empty() {
                    return Err(self.error("expected a denominator"));
                }
                let d: BigInt = d.parse().unwrap();
                if d.is_zero() {
                    return Err(Error::Syntax {
                        offset: start,
                        message: "zero denominator".into(),
                    });
                }
                value = value / Rational::from_integer(d);
            }
            self.no_implicit_product()?;
            return Ok(MultiPoly::constant(self.vars, K::from_rational(value)));
        }
        if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            if name == "i" {
                return match K::imaginary_unit() {
                    Some(u) => Ok(MultiPoly::constant(self.vars, u)),
                    None => Err(Error::ImaginaryUnitOverQ),
                };
            }
            return match self.vars.index_of(name) {
                Some(k) => Ok(MultiPoly::var(self.vars, k)),
                None if name.len() > 1 && name.chars().all(|ch| self.vars.index_of(&ch.to_string()).is_some() || ch == 'i') => {
                    Err(Error::Syntax {
                        offset: start + 1,
                        message: "implicit multiplication is not allowed".into(),
                    })
                }
                None => Err(Error::UnknownVariable(name.to_string())),
            };
        }
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(self.error("expected `)`"));
            }
            self.pos += 1;
            return Ok(e);
        }
        Err(self.error("unexpected character"))
    }

    fn no_implicit_product(&self) -> Result<()> {
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'(' => Err(self.error("implicit multiplication is not allowed")),
            _ => Ok(()),
        }
    }
}

fn monomial_text(vars: &Vars, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, &e) in vars.names().iter().zip(&m.0) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Canonical text: terms in descending graded-lex order, unit coefficients
/// omitted, signs folded into the joins.
pub fn serialize<K: Field>(p: &MultiPoly<K>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (m, c) in p.terms().rev() {
        let term = if m.is_one() {
            c.to_string()
        } else {
            let mono = monomial_text(p.vars(), m);
            if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{mono}")
            } else if c.is_compound() {
                format!("({c})*{mono}")
            } else {
                format!("{c}*{mono}")
            }
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}
