//! Text form of polynomials.
//!
//! Grammar: `poly := ['-'] term (('+'|'-') term)*`; a term is a '*'-joined
//! product of factors; a factor is a variable, an integer or rational
//! literal, or a parenthesized polynomial, each with an optional `^exp`.
//! Whitespace is insignificant. `render` (the `Display` impl on
//! `Polynomial`) emits terms in decreasing grevlex order with coefficients
//! in lowest terms, and parsing that text reproduces the polynomial
//! exactly.

use super::poly::Polynomial;
use super::RingContext;
use crate::error::{AlgebraError, Result};
use num_bigint::BigInt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Int(BigInt),
    Ident(String),
    End,
}

struct Parser<'a> {
    ring: &'a Arc<RingContext>,
    src: &'a [u8],
    pos: usize,
    tok: Tok,
    tok_pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, ring: &'a Arc<RingContext>) -> Result<Self> {
        let mut p = Parser {
            ring,
            src: src.as_bytes(),
            pos: 0,
            tok: Tok::End,
            tok_pos: 0,
        };
        p.advance()?;
        Ok(p)
    }

    fn error<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse {
            pos,
            msg: msg.into(),
        })
    }

    fn advance(&mut self) -> Result<()> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        self.tok_pos = start;
        if self.pos >= self.src.len() {
            self.tok = Tok::End;
            return Ok(());
        }
        let c = self.src[self.pos];
        self.pos += 1;
        self.tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(digits.parse::<BigInt>().unwrap())
            }
            c if c.is_ascii_alphabetic() => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(
                    std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .to_string(),
                )
            }
            other => {
                return self.error(start, format!("unexpected character `{}`", other as char));
            }
        };
        Ok(())
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.tok == Tok::Minus {
            negate = true;
            self.advance()?;
        } else if self.tok == Tok::Plus {
            self.advance()?;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.advance()?;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.tok == Tok::Star {
            self.advance()?;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        // Caller consumed `^`.
        let pos = self.tok_pos;
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Int(e) => {
                self.advance()?;
                u32::try_from(&e).map_err(|_| AlgebraError::Parse {
                    pos,
                    msg: "exponent out of range".into(),
                })
            }
            other => {
                self.tok = other;
                self.error(pos, "expected integer exponent")
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let pos = self.tok_pos;
        let base = match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Int(n) => {
                self.advance()?;
                let mut coeff = self.ring.field().scalar_from_bigint(&n);
                if self.tok == Tok::Slash {
                    self.advance()?;
                    let dpos = self.tok_pos;
                    match std::mem::replace(&mut self.tok, Tok::End) {
                        Tok::Int(den) => {
                            self.advance()?;
                            let den_scalar = self.ring.field().scalar_from_bigint(&den);
                            if den_scalar.is_zero() {
                                return self.error(dpos, "denominator vanishes in this field");
                            }
                            coeff = coeff.div(&den_scalar);
                        }
                        other => {
                            self.tok = other;
                            return self.error(dpos, "expected integer denominator");
                        }
                    }
                }
                Polynomial::constant(self.ring, coeff)
            }
            Tok::Ident(name) => {
                self.advance()?;
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or(AlgebraError::UnknownVariable { name, pos })?;
                Polynomial::var(self.ring, idx)
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return self.error(self.tok_pos, "expected `)`");
                }
                self.advance()?;
                inner
            }
            other => {
                self.tok = other;
                return self.error(pos, "expected a coefficient, variable or `(`");
            }
        };
        if self.tok == Tok::Caret {
            self.advance()?;
            let e = self.exponent()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }
}

/// Parses the textual form of a polynomial over `ring`.
pub fn parse_poly(text: &str, ring: &Arc<RingContext>) -> Result<Polynomial> {
    let mut parser = Parser::new(text, ring)?;
    if parser.tok == Tok::End {
        return Err(AlgebraError::Parse {
            pos: 0,
            msg: "empty polynomial".into(),
        });
    }
    let p = parser.expr()?;
    if parser.tok != Tok::End {
        return Err(AlgebraError::Parse {
            pos: parser.tok_pos,
            msg: "trailing input after polynomial".into(),
        });
    }
    Ok(p)
}

/// Canonical text form; inverse of [`parse_poly`].
pub fn render_poly(p: &Polynomial) -> String {
    p.to_string()
}
