//! Parser for human-readable Puiseux series expressions.
//!
//! Grammar (ASCII, whitespace ignored):
//!
//! ```text
//! series := term ('+' term)*
//! term   := [rat '*']? factor ('*' factor)*
//! factor := ('x' | 'y') ['^' '(' rat ')' | '^' int]
//! rat    := int '/' int | int
//! ```
//!
//! A missing exponent means 1. Coefficients are validated nonzero and
//! then discarded: the invariants depend only on the support. Each
//! variable may appear at most once per term (`y*y` is a syntax error,
//! not `y^2`), duplicate support entries are an error, and curve mode
//! forbids `x`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::ModelError;
use crate::exact::{ExponentPair, Rational};
use crate::model::{CurveSeries, SurfaceSeries};

/// Parse failures, with byte offsets into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed input; `expected` names what the parser was looking for.
    Syntax {
        offset: usize,
        expected: &'static str,
    },
    /// The same exponent (pair) occurs twice; supports are sets.
    DuplicateTerm { offset: usize },
    /// An exponent is negative.
    NegativeExponent { offset: usize },
    /// `x` used in curve mode.
    WrongVariable { offset: usize },
    /// The parsed support violates a series invariant (e.g. a curve
    /// exponent of zero).
    Invalid(ModelError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { offset, expected } => {
                write!(f, "syntax error at offset {offset}: expected {expected}")
            }
            ParseError::DuplicateTerm { offset } => {
                write!(f, "duplicate term at offset {offset}")
            }
            ParseError::NegativeExponent { offset } => {
                write!(f, "negative exponent at offset {offset}")
            }
            ParseError::WrongVariable { offset } => {
                write!(f, "variable x is not allowed in a curve series (offset {offset})")
            }
            ParseError::Invalid(e) => write!(f, "invalid series: {e}"),
        }
    }
}

impl core::error::Error for ParseError {}

impl From<ModelError> for ParseError {
    fn from(e: ModelError) -> Self {
        ParseError::Invalid(e)
    }
}

/// Parse a curve series such as `y^(3/2) + y^(7/4) + y^(11/6)`.
pub fn parse_curve(text: &str) -> Result<CurveSeries, ParseError> {
    let pairs = Parser::new(text, false).series()?;
    let exponents = pairs.into_iter().map(|p| p.y).collect();
    Ok(CurveSeries::new(exponents)?)
}

/// Parse a surface series such as `x^(1/2)*y^(3/2) + x^(2/3)*y^(11/6)`.
pub fn parse_surface(text: &str) -> Result<SurfaceSeries, ParseError> {
    let pairs = Parser::new(text, true).series()?;
    Ok(SurfaceSeries::new(pairs)?)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allow_x: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, allow_x: bool) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
            allow_x,
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.src.get(self.pos), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            expected,
        }
    }

    fn series(&mut self) -> Result<Vec<ExponentPair>, ParseError> {
        let mut support: Vec<ExponentPair> = Vec::new();
        loop {
            let term_offset = {
                self.skip_ws();
                self.pos
            };
            let pair = self.term()?;
            if support.contains(&pair) {
                return Err(ParseError::DuplicateTerm {
                    offset: term_offset,
                });
            }
            support.push(pair);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                }
                None => break,
                Some(_) => return Err(self.syntax("'+' or end of input")),
            }
        }
        Ok(support)
    }

    fn term(&mut self) -> Result<ExponentPair, ParseError> {
        // Optional coefficient, then at least one variable factor.
        if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'-') {
            let offset = self.pos;
            let coefficient = self.rational()?;
            if coefficient.is_zero() {
                return Err(ParseError::Syntax {
                    offset,
                    expected: "a nonzero coefficient",
                });
            }
            if self.peek() != Some(b'*') {
                return Err(self.syntax("'*' after coefficient"));
            }
            self.pos += 1;
        }
        let mut x_exp: Option<Rational> = None;
        let mut y_exp: Option<Rational> = None;
        self.factor(&mut x_exp, &mut y_exp)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut x_exp, &mut y_exp)?;
        }
        Ok(ExponentPair::new(
            x_exp.unwrap_or_else(Rational::zero),
            y_exp.unwrap_or_else(Rational::zero),
        ))
    }

    fn factor(
        &mut self,
        x_exp: &mut Option<Rational>,
        y_exp: &mut Option<Rational>,
    ) -> Result<(), ParseError> {
        let offset = {
            self.skip_ws();
            self.pos
        };
        let slot = match self.peek() {
            Some(b'x') if self.allow_x => &mut *x_exp,
            Some(b'x') => return Err(ParseError::WrongVariable { offset }),
            Some(b'y') => &mut *y_exp,
            _ => return Err(self.syntax("a variable ('x' or 'y')")),
        };
        if slot.is_some() {
            return Err(ParseError::Syntax {
                offset,
                expected: "each variable at most once per term",
            });
        }
        self.pos += 1;
        let exponent = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.exponent()?
        } else {
            Rational::from(BigInt::from(1))
        };
        *slot = Some(exponent);
        Ok(())
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let offset = self.pos;
                let value = self.rational()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("')'"));
                }
                self.pos += 1;
                self.check_nonnegative(value, offset)
            }
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let offset = self.pos;
                let value = Rational::from(self.integer()?);
                self.check_nonnegative(value, offset)
            }
            _ => Err(self.syntax("an exponent (integer or parenthesized rational)")),
        }
    }

    fn check_nonnegative(&self, value: Rational, offset: usize) -> Result<Rational, ParseError> {
        if value.is_negative() {
            Err(ParseError::NegativeExponent { offset })
        } else {
            Ok(value)
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numerator = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let offset = self.pos;
            let denominator = self.integer()?;
            if denominator.is_zero() {
                return Err(ParseError::Syntax {
                    offset,
                    expected: "a nonzero denominator",
                });
            }
            Ok(Rational::new(numerator, denominator))
        } else {
            Ok(Rational::from(numerator))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.syntax("an integer"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos])
            .expect("ASCII digits are valid UTF-8");
        text.parse::<BigInt>().map_err(|_| ParseError::Syntax {
            offset: start,
            expected: "an integer",
        })
    }
}
