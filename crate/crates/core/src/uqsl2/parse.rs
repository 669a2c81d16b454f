//! Parser for algebra expressions.
//!
//! ```text
//! element := ['-'] term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := atom ('^' ['-'] int)?
//! atom    := 'e' | 'f' | 'k' | 't' | int | '[' ['-'] int ']'
//!          | '(' element ')' | 'sqrt' '(' element ')'
//! ```
//!
//! `a/b` requires `b` invertible: a nonzero single-radical scalar times a
//! power of `k`. `sqrt` takes a rational function of `t`. Whitespace is
//! ignored. Everything the canonical printer emits is accepted.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::AlgebraElement;
use crate::scalars::{qint, RadicalScalar, RatFunc};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

struct Lexer;

impl Lexer {
    fn tokens(src: &str) -> Result<Vec<(usize, Tok)>> {
        let chars: Vec<(usize, char)> = src.char_indices().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let (pos, ch) = chars[i];
            if ch.is_whitespace() {
                i += 1;
            } else if ch.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|c| c.1).collect();
                out.push((pos, Tok::Int(text.parse().expect("digits"))));
            } else if ch.is_alphabetic() || ch == '_' {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|c| c.1).collect();
                out.push((pos, Tok::Ident(text)));
            } else if "+-*/^()[]".contains(ch) {
                out.push((pos, Tok::Sym(ch)));
                i += 1;
            } else {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character '{ch}'"),
                });
            }
        }
        out.push((src.len(), Tok::End));
        Ok(out)
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected '{c}'")))
        }
    }

    fn element(&mut self) -> Result<AlgebraElement> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if *self.peek() == Tok::Sym('/') {
                let pos = self.pos();
                self.bump();
                let d = self.factor()?;
                let inv = d
                    .inverse()
                    .ok_or_else(|| syntax(pos, "division by a non-invertible element"))?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn signed_int(&mut self) -> Result<BigInt> {
        let negative = self.eat('-');
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(if negative { -n } else { n }),
            _ => Err(syntax(pos, "expected an integer")),
        }
    }

    fn factor(&mut self) -> Result<AlgebraElement> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let n = self.signed_int()?;
        let n = n
            .to_i32()
            .filter(|n| n.unsigned_abs() <= 4096)
            .ok_or_else(|| syntax(pos, "exponent out of range"))?;
        if n >= 0 {
            return Ok(base.pow(n as u32));
        }
        let inv = base
            .inverse()
            .ok_or_else(|| syntax(pos, "negative power of a non-invertible element"))?;
        Ok(inv.pow(n.unsigned_abs()))
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let r = num_rational::BigRational::from_integer(n);
                Ok(AlgebraElement::scalar(RatFunc::rational(r).into()))
            }
            Tok::Ident(name) => match name.as_str() {
                "e" => Ok(AlgebraElement::e()),
                "f" => Ok(AlgebraElement::f()),
                "k" => Ok(AlgebraElement::k()),
                "t" => Ok(AlgebraElement::scalar(RadicalScalar::t_pow(1))),
                "sqrt" => {
                    self.expect('(')?;
                    let inner_pos = self.pos();
                    let x = self.element()?;
                    self.expect(')')?;
                    let r = x
                        .as_scalar()
                        .and_then(|s| s.as_rational())
                        .ok_or_else(|| syntax(inner_pos, "sqrt needs a rational function of t"))?;
                    let s = RadicalScalar::sqrt(&r).map_err(|e| syntax(inner_pos, e.to_string()))?;
                    Ok(AlgebraElement::scalar(s))
                }
                _ => Err(Error::UnknownIdentifier { pos, name }),
            },
            Tok::Sym('(') => {
                let x = self.element()?;
                self.expect(')')?;
                Ok(x)
            }
            Tok::Sym('[') => {
                let npos = self.pos();
                let n = self.signed_int()?;
                let n = n
                    .to_i64()
                    .filter(|n| n.unsigned_abs() <= 4096)
                    .ok_or_else(|| syntax(npos, "q-integer out of range"))?;
                self.expect(']')?;
                Ok(AlgebraElement::scalar(RadicalScalar::from(qint(n))))
            }
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            Tok::Sym(c) => Err(syntax(pos, format!("unexpected '{c}'"))),
        }
    }
}

/// Parse and normal-order an expression.
pub fn parse_element(src: &str) -> Result<AlgebraElement> {
    let mut p = Parser {
        toks: Lexer::tokens(src)?,
        at: 0,
    };
    let x = p.element()?;
    match p.peek() {
        Tok::End => Ok(x),
        _ => Err(syntax(p.pos(), "unexpected trailing input")),
    }
}
