//! Parser for ordinal literals.
//!
//! ```text
//! ord  := "0" | term ("+" term)*
//! term := "w" ["^" "(" ord ")" | "^" digit+] ["*" digit+] | digit+
//! ```
//!
//! Whitespace is ignored everywhere. Only the spelling produced by
//! `Display` is accepted, so every ordinal has exactly one literal.

use std::fmt;

use super::{Ordinal, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the original text.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("empty literal")]
    Empty,
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected a digit")]
    ExpectedDigit,
    #[error("number has a leading zero")]
    LeadingZero,
    #[error("number does not fit in 64 bits")]
    Overflow,
    #[error("0 cannot appear as a summand")]
    ZeroSummand,
    #[error("coefficient must be at least 2 (omit \"*1\")")]
    TrivialCoefficient,
    #[error("exponent 0 or 1 must be written as \"1\" or \"w\"")]
    TrivialExponent,
    #[error("finite exponents are written without parentheses")]
    ParenthesizedFinite,
    #[error("exponents must strictly decrease")]
    NotDecreasing,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.kind)
    }
}

impl std::error::Error for ParseError {}

pub(super) fn parse(text: &str) -> Result<Ordinal, ParseError> {
    let mut p = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        idx: 0,
        len: text.len(),
    };
    if p.chars.is_empty() {
        return Err(p.error(ParseErrorKind::Empty));
    }
    let value = p.ord()?;
    match p.peek() {
        None => Ok(value),
        Some(c) => Err(p.error(ParseErrorKind::UnexpectedChar(c))),
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    idx: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.chars.get(self.idx).map_or(self.len, |&(p, _)| p)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.position(),
            kind,
        }
    }

    fn error_at(&self, position: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { position, kind }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.idx += 1;
                Ok(())
            }
            Some(x) => Err(self.error(ParseErrorKind::UnexpectedChar(x))),
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let start = self.position();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.idx += 1;
        }
        if digits.is_empty() {
            return Err(match self.peek() {
                None => self.error(ParseErrorKind::UnexpectedEnd),
                Some(_) => self.error(ParseErrorKind::ExpectedDigit),
            });
        }
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(self.error_at(start, ParseErrorKind::LeadingZero));
        }
        digits
            .parse()
            .map_err(|_| self.error_at(start, ParseErrorKind::Overflow))
    }

    fn ord(&mut self) -> Result<Ordinal, ParseError> {
        let start = self.position();
        let mut terms: Vec<Term> = Vec::new();
        loop {
            let term_start = self.position();
            let term = self.term()?;
            match term {
                None if terms.is_empty() && self.peek() != Some('+') => {
                    return Ok(Ordinal::zero());
                }
                None => return Err(self.error_at(term_start, ParseErrorKind::ZeroSummand)),
                Some(t) => {
                    if terms.last().is_some_and(|prev| t.exponent >= prev.exponent) {
                        return Err(self.error_at(term_start, ParseErrorKind::NotDecreasing));
                    }
                    terms.push(t);
                }
            }
            if !self.eat('+') {
                break;
            }
        }
        debug_assert!(self.position() >= start);
        Ok(Ordinal { terms })
    }

    /// `None` stands for the literal `0`.
    fn term(&mut self) -> Result<Option<Term>, ParseError> {
        match self.peek() {
            Some('w') => {
                self.idx += 1;
                let exponent = if self.eat('^') {
                    let exp_start = self.position();
                    if self.eat('(') {
                        let inner = self.ord()?;
                        self.expect(')')?;
                        if inner.is_finite() {
                            return Err(
                                self.error_at(exp_start, ParseErrorKind::ParenthesizedFinite)
                            );
                        }
                        inner
                    } else {
                        let k = self.number()?;
                        if k <= 1 {
                            return Err(self.error_at(exp_start, ParseErrorKind::TrivialExponent));
                        }
                        Ordinal::finite(k)
                    }
                } else {
                    Ordinal::one()
                };
                let coefficient = if self.eat('*') {
                    let coef_start = self.position();
                    match self.number()? {
                        0 => return Err(self.error_at(coef_start, ParseErrorKind::ZeroSummand)),
                        1 => {
                            return Err(
                                self.error_at(coef_start, ParseErrorKind::TrivialCoefficient)
                            )
                        }
                        c => c,
                    }
                } else {
                    1
                };
                Ok(Some(Term {
                    exponent,
                    coefficient,
                }))
            }
            Some(c) if c.is_ascii_digit() => match self.number()? {
                0 => Ok(None),
                n => Ok(Some(Term {
                    exponent: Ordinal::zero(),
                    coefficient: n,
                })),
            },
            Some(c) => Err(self.error(ParseErrorKind::UnexpectedChar(c))),
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
        }
    }
}
