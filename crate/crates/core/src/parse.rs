//! Text front end for noncommutative expressions.
//!
//! Grammar (juxtaposition or `*` is the noncommutative product, word order
//! is left to right):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/' | <juxtaposition>) factor)*
//! factor := '-' factor | power
//! power  := atom ('^' '-'? INTEGER)?
//! atom   := INTEGER | IDENT | '(' expr ')'
//! ```
//!
//! Identifiers: generators `z v xm xp vb zb` (also `z̄ v̄ x₋ x₊`),
//! parameters `q q12 q13 q14 q23 q24 q34` (also `q₁₂`...), and `lambda`/`λ`
//! for `q - q^-1`. Division and negative powers are only allowed for
//! invertible scalars (single parameter monomials with nonzero coefficient).

use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeff::{lambda, LaurentPoly, Param};
use crate::flag::{FlagAlgebra, Generator, NCPoly, WordPoly};
use crate::scalar::Scalar;

const MAX_POWER: i64 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected {0}")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("exponent must be an integer")]
    BadExponent,
    #[error("exponent {0} out of range")]
    ExponentRange(i64),
    #[error("{0} is not an invertible scalar")]
    NotInvertible(String),
    #[error("expression contains generators where a scalar is required")]
    NotScalar,
}

/// A syntax or symbol error at a character offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {kind}", .position + 1)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {}", n),
        Tok::Ident(s) => format!("identifier `{}`", s),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

fn ident_start(c: char) -> bool {
    c.is_alphabetic() || c == 'λ'
}

fn ident_continue(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '\u{304}' | '₊' | '₋' | '_')
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Num(digits.parse().unwrap())));
                continue;
            }
            c if ident_start(c) => {
                i += 1;
                while i < chars.len() && ident_continue(chars[i]) {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            c => {
                return Err(ParseError {
                    position: i,
                    kind: ParseErrorKind::UnexpectedChar(c),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.offset(),
            kind,
        })
    }

    fn unexpected<T>(&self) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(describe(t))),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expr<S: Scalar>(&mut self) -> Result<WordPoly<S>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<S: Scalar>(&mut self) -> Result<WordPoly<S>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.factor()?;
                    let inv = invert(&d).ok_or(ParseError {
                        position: at,
                        kind: ParseErrorKind::NotInvertible(d.to_string()),
                    })?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor<S: Scalar>(&mut self) -> Result<WordPoly<S>, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        self.power()
    }

    fn power<S: Scalar>(&mut self) -> Result<WordPoly<S>, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.offset();
        let n = match self.peek() {
            Some(Tok::Num(n)) => i64::try_from(n).ok().filter(|n| *n <= MAX_POWER),
            _ => return self.err(ParseErrorKind::BadExponent),
        };
        let Some(n) = n else {
            return self.err(ParseErrorKind::ExponentRange(MAX_POWER + 1));
        };
        self.pos += 1;
        if !negative {
            return Ok(base.pow(n as u32));
        }
        let inv = invert(&base).ok_or(ParseError {
            position: at,
            kind: ParseErrorKind::NotInvertible(base.to_string()),
        })?;
        Ok(WordPoly::constant(inv.pow(n as i32).unwrap()))
    }

    fn atom<S: Scalar>(&mut self) -> Result<WordPoly<S>, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let c = S::from_ratio(&n, &BigInt::from(1)).ok_or(ParseError {
                    position: self.offset(),
                    kind: ParseErrorKind::UnexpectedToken(format!("number {}", n)),
                })?;
                Ok(WordPoly::constant(LaurentPoly::constant(c)))
            }
            Some(Tok::Ident(name)) => {
                let at = self.offset();
                self.pos += 1;
                resolve(&name).ok_or(ParseError {
                    position: at,
                    kind: ParseErrorKind::UnknownSymbol(name),
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.unexpected();
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => self.unexpected(),
        }
    }
}

fn invert<S: Scalar>(p: &WordPoly<S>) -> Option<LaurentPoly<S>> {
    p.as_scalar()?.inverse()
}

fn resolve<S: Scalar>(name: &str) -> Option<WordPoly<S>> {
    if let Some(g) = Generator::from_name(name) {
        return Some(WordPoly::generator(g));
    }
    if let Some(p) = Param::from_name(name) {
        return Some(WordPoly::constant(LaurentPoly::param(p)));
    }
    if name == "lambda" || name == "λ" {
        return Some(WordPoly::constant(lambda()));
    }
    None
}

/// Parse into the free algebra; words keep their written order.
pub fn parse_expr<S: Scalar>(text: &str) -> Result<WordPoly<S>, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.unexpected();
    }
    Ok(out)
}

/// Parse and normal order in `alg`.
pub fn parse_poly<S: Scalar>(alg: &FlagAlgebra<S>, text: &str) -> Result<NCPoly<S>, ParseError> {
    Ok(alg.normal_order_poly(&parse_expr(text)?))
}

/// Parse an expression that must not contain generators.
pub fn parse_laurent<S: Scalar>(text: &str) -> Result<LaurentPoly<S>, ParseError> {
    parse_expr::<S>(text)?.as_scalar().ok_or(ParseError {
        position: 0,
        kind: ParseErrorKind::NotScalar,
    })
}

impl<S: Scalar> FromStr for LaurentPoly<S> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_laurent(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ParamExponent;
    use num_rational::BigRational;
    use Generator::*;

    type W = WordPoly<BigRational>;
    type L = LaurentPoly<BigRational>;

    #[test]
    fn word_order_is_written_order() {
        let p: W = parse_expr("zb*z").unwrap();
        assert_eq!(p, W::word(L::one(), vec![Zb, Z]));
        let juxt: W = parse_expr("zb z").unwrap();
        assert_eq!(juxt, p);
    }

    #[test]
    fn lambda_coefficient() {
        let p: W = parse_expr("(q - q^-1)*vb").unwrap();
        assert_eq!(p, W::word(lambda(), vec![Vb]));
        let alias: W = parse_expr("λ*v̄").unwrap();
        assert_eq!(alias, p);
    }

    #[test]
    fn zb_v_relation_normalizes_to_zero() {
        let alg = FlagAlgebra::<BigRational>::generic();
        let p = parse_poly(&alg, "zb*v - (q13*q34*q^-2*q14^-1)*v*zb - (q-q^-1)*xp").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn rationals_and_division() {
        let l: L = "3/2*q13/q14".parse().unwrap();
        assert_eq!(
            l,
            L::monomial(
                BigRational::new(3.into(), 2.into()),
                ParamExponent::from_pairs(&[(Param::Q13, 1), (Param::Q14, -1)])
            )
        );
        let neg: L = "-q^2".parse().unwrap();
        assert_eq!(neg, -L::param_pow(Param::Q, 2));
    }

    #[test]
    fn laurent_round_trip() {
        for text in [
            "q - q^-1",
            "q^2 + 1 + q^-2",
            "q13*q24*q14^-1*q23^-1",
            "-3/4*q12 + 5",
            "0",
        ] {
            let l: L = text.parse().unwrap();
            assert_eq!(l.to_string(), text);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_expr::<BigRational>("z + w").unwrap_err();
        assert_eq!(e.position, 4);
        assert_eq!(e.kind, ParseErrorKind::UnknownSymbol("w".into()));
        let e = parse_expr::<BigRational>("z*(v").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        let e = parse_expr::<BigRational>("z^-1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NotInvertible(_)));
        let e = parse_expr::<BigRational>("q/(q-1)").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NotInvertible(_)));
        let e = parse_expr::<BigRational>("z $").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedChar('$'));
        assert!(parse_laurent::<BigRational>("q*z").is_err());
        assert!(parse_expr::<BigRational>("1/0").is_err());
    }

    #[test]
    fn unicode_parameters() {
        let a: L = "q₁₂*q₃₄".parse().unwrap();
        let b: L = "q12*q34".parse().unwrap();
        assert_eq!(a, b);
        let p: W = parse_expr("x₊ x₋").unwrap();
        assert_eq!(p, W::word(L::one(), vec![Xp, Xm]));
    }
}
