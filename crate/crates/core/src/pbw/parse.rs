//! Text syntax for enveloping-algebra elements: `3/2*e^2*x - x`, `(x*y - y*x) + 1/2`.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{EnvElement, Ring};
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::superalg::LieSuperalgebra;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Num(s.parse().expect("digits")));
            }
            a if a.is_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push(Token::Name(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ring: &'a Ring,
    alg: Arc<LieSuperalgebra>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<EnvElement> {
        let mut acc = EnvElement::zero(&self.alg);
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<EnvElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.ring.mul(&acc, &f)?;
                }
                // juxtaposition: `2x`, `x y`
                Some(Token::Name(_)) | Some(Token::Open) | Some(Token::Num(_)) => {
                    let f = self.factor()?;
                    acc = self.ring.mul(&acc, &f)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<EnvElement> {
        let base = match self.next() {
            Some(Token::Num(n)) => {
                let mut value = Q::from_integer(n);
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Num(d)) if d != BigInt::from(0) => value /= Q::from_integer(d),
                        _ => return Err(Error::Parse("expected a nonzero denominator".into())),
                    }
                }
                EnvElement::scalar(&self.alg, value)
            }
            Some(Token::Name(name)) => EnvElement::named(&self.alg, &name)?,
            Some(Token::Open) => {
                let inner = self.expr()?;
                if self.next() != Some(Token::Close) {
                    return Err(Error::Parse("missing `)`".into()));
                }
                inner
            }
            Some(Token::Minus) => return Ok(-&self.factor()?),
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let k = match self.next() {
                Some(Token::Num(n)) => {
                    u32::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?
                }
                _ => return Err(Error::Parse("expected an exponent".into())),
            };
            let mut acc = EnvElement::one(&self.alg);
            for _ in 0..k {
                acc = self.ring.mul(&acc, &base)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }
}

/// Parses an expression and returns its PBW normal form.
pub fn parse_element(alg: &Arc<LieSuperalgebra>, src: &str) -> Result<EnvElement> {
    let ring = Ring::new(alg.clone());
    parse_with(&ring, src)
}

pub fn parse_with(ring: &Ring, src: &str) -> Result<EnvElement> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
        alg: ring.algebra().clone(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.toks[p.pos]
        )));
    }
    Ok(e)
}
