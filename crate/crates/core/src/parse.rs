//! Text parser for polynomial expressions.
//!
//! Grammar: integer literals, ring variable names, `+`, `-`, `*`, `/`,
//! `^` with a nonnegative integer exponent, parentheses, unary minus.
//! Juxtaposition is not multiplication (`x y` is an error, `x*y` is the
//! product). Division is only by nonzero constants, so that any printed
//! polynomial (including rational coefficients such as `1/2*x`) parses
//! back to itself.

use std::fmt;

use num::BigInt;
use thiserror::Error;

use crate::poly::Poly;
use crate::ring::Ring;

/// A parse failure, with the 1-based character position where it
/// occurred.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnknownVariable(String),
    ExponentOverflow,
    ExpectedExponent,
    ExpectedClosingParen,
    DivisionByNonConstant,
    DivisionByZero,
    TrailingInput,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {:?}", c),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable {:?}", v),
            ParseErrorKind::ExponentOverflow => write!(f, "exponent overflow"),
            ParseErrorKind::ExpectedExponent => write!(f, "expected a nonnegative integer exponent"),
            ParseErrorKind::ExpectedClosingParen => write!(f, "expected ')'"),
            ParseErrorKind::DivisionByNonConstant => {
                write!(f, "division is only defined by nonzero constants")
            }
            ParseErrorKind::DivisionByZero => write!(f, "division by zero"),
            ParseErrorKind::TrailingInput => write!(f, "trailing input"),
        }
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        ring: ring.clone(),
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err(ParseErrorKind::TrailingInput));
    }
    Ok(poly)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    ring: Ring,
}

impl Parser {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.pos + 1, kind }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_token(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek_token() {
                Some('+') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.checked_add(&rhs).expect("same ring");
                }
                Some('-') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.checked_sub(&rhs).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek_token() {
                Some('*') => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = acc
                        .checked_mul(&rhs)
                        .map_err(|_| self.err(ParseErrorKind::ExponentOverflow))?;
                }
                Some('/') => {
                    let at = self.pos;
                    self.bump();
                    let rhs = self.unary()?;
                    if !rhs.is_constant() {
                        return Err(ParseError {
                            position: at + 1,
                            kind: ParseErrorKind::DivisionByNonConstant,
                        });
                    }
                    let c = rhs.constant_term();
                    let inv = c.inverse().map_err(|_| ParseError {
                        position: at + 1,
                        kind: if c.is_zero() {
                            ParseErrorKind::DivisionByZero
                        } else {
                            ParseErrorKind::DivisionByNonConstant
                        },
                    })?;
                    acc = acc.scalar_mul(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.peek_token() == Some('-') {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek_token() == Some('^') {
            self.bump();
            self.skip_ws();
            let e = self.exponent()?;
            return base
                .pow(e)
                .map_err(|_| self.err(ParseErrorKind::ExponentOverflow));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let mut digits = String::new();
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.err(ParseErrorKind::ExpectedExponent));
        }
        digits.parse::<u32>().map_err(|_| ParseError {
            position: start + 1,
            kind: ParseErrorKind::ExponentOverflow,
        })
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek_token() != Some(')') {
                    return Err(self.err(ParseErrorKind::ExpectedClosingParen));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut digits = String::new();
                while self.peek().is_some_and(|ch| ch.is_ascii_digit()) {
                    digits.push(self.bump().unwrap());
                }
                let n: BigInt = digits.parse().expect("digits");
                Ok(Poly::constant(&self.ring, self.ring.domain().from_bigint(&n)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let mut name = String::new();
                while self
                    .peek()
                    .is_some_and(|ch| ch.is_alphanumeric() || ch == '_')
                {
                    name.push(self.bump().unwrap());
                }
                match self.ring.variable_index(&name) {
                    Some(idx) => Ok(Poly::variable(&self.ring, idx)),
                    None => Err(ParseError {
                        position: start + 1,
                        kind: ParseErrorKind::UnknownVariable(name),
                    }),
                }
            }
            Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c))),
        }
    }
}
