//! Canonical text form of polynomials and its parser.
//!
//! A [`BiPoly`] is written with λ-terms in descending degree, each
//! coefficient an α-polynomial in ascending degree:
//!
//! ```text
//! l^3 - 6a*l^2 + (-3 + 9a^2)*l + (2 - 6a + 9a^2 - 9a^3)
//! ```
//!
//! `l` stands for λ and `a` for α. Rationals are `p/q` (or `p`); a rational
//! written directly before a variable multiplies it, so `1/2a` is α/2.
//! Coefficients with more than one α-term are parenthesized. The parser
//! accepts any polynomial expression built from `+ - * ^`, parentheses,
//! juxtaposition, and the aliases `λ`/`α`, which makes the canonical form
//! round-trip exactly.

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bi::BiPoly;
use super::rational::Rational;
use super::uni::{AlphaPoly, UniPoly};
use crate::error::{Error, Result};

fn write_rational(out: &mut impl Write, r: &Rational) -> fmt::Result {
    if r.denom().is_one() {
        write!(out, "{}", r.numer())
    } else {
        write!(out, "{}/{}", r.numer(), r.denom())
    }
}

/// Writes `|c|·var^k` without sign. A unit coefficient is omitted when
/// a variable follows.
fn write_monomial(out: &mut impl Write, c: &Rational, var: char, k: usize) -> fmt::Result {
    let mag = c.abs();
    if k == 0 {
        return write_rational(out, &mag);
    }
    if !mag.is_one() {
        write_rational(out, &mag)?;
    }
    out.write_char(var)?;
    if k > 1 {
        write!(out, "^{k}")?;
    }
    Ok(())
}

pub(crate) fn write_uni(out: &mut impl Write, p: &UniPoly, var: char) -> fmt::Result {
    if p.is_zero() {
        return out.write_char('0');
    }
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => out.write_char('-')?,
            (true, false) => {}
            (false, true) => out.write_str(" - ")?,
            (false, false) => out.write_str(" + ")?,
        }
        write_monomial(out, c, var, k)?;
        first = false;
    }
    Ok(())
}

fn write_lambda_power(out: &mut impl Write, k: usize) -> fmt::Result {
    match k {
        0 => Ok(()),
        1 => out.write_char('l'),
        _ => write!(out, "l^{k}"),
    }
}

pub(crate) fn write_bi(out: &mut impl Write, p: &BiPoly) -> fmt::Result {
    if p.is_zero() {
        return out.write_char('0');
    }
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let nonzero: Vec<(usize, &Rational)> = c
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        if nonzero.len() == 1 {
            let (j, r) = nonzero[0];
            let neg = r.is_negative();
            match (first, neg) {
                (true, true) => out.write_char('-')?,
                (true, false) => {}
                (false, true) => out.write_str(" - ")?,
                (false, false) => out.write_str(" + ")?,
            }
            if j == 0 && k > 0 && r.abs().is_one() {
                write_lambda_power(out, k)?;
            } else {
                write_monomial(out, r, 'a', j)?;
                if k > 0 {
                    out.write_char('*')?;
                    write_lambda_power(out, k)?;
                }
            }
        } else {
            if !first {
                out.write_str(" + ")?;
            }
            out.write_char('(')?;
            write_uni(out, c, 'a')?;
            out.write_char(')')?;
            if k > 0 {
                out.write_char('*')?;
                write_lambda_power(out, k)?;
            }
        }
        first = false;
    }
    Ok(())
}

/// Abbreviated rendering for error messages.
pub(crate) fn short(p: &BiPoly) -> String {
    let s = p.to_string();
    if s.len() > 120 {
        format!("{}…", &s[..s.char_indices().nth(117).map_or(s.len(), |(i, _)| i)])
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Lambda,
    Alpha,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(digits.parse().expect("ascii digits")));
            }
            'l' | 'λ' => {
                chars.next();
                out.push(Token::Lambda);
            }
            'a' | 'α' => {
                chars.next();
                out.push(Token::Alpha);
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' | '−' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' | '·' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            other => return Err(parse_err(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

fn parse_err(msg: String) -> Error {
    Error::Parse { line: 0, msg }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                -self.term()?
            }
            Some(Token::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = acc * self.power()?;
                }
                Some(Token::Int(_) | Token::Lambda | Token::Alpha | Token::LParen) => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            match self.next() {
                Some(Token::Int(e)) => {
                    let e: usize = e
                        .try_into()
                        .map_err(|_| parse_err("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(parse_err("expected integer exponent after '^'".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<BiPoly> {
        match self.next() {
            Some(Token::Int(n)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.next();
                    match self.next() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            Ok(BiPoly::constant(Rational::new(n, d)))
                        }
                        _ => Err(parse_err("expected nonzero integer denominator".into())),
                    }
                } else {
                    Ok(BiPoly::constant(Rational::from_integer(n)))
                }
            }
            Some(Token::Lambda) => Ok(BiPoly::lambda()),
            Some(Token::Alpha) => Ok(BiPoly::alpha()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(parse_err("missing ')'".into())),
                }
            }
            Some(t) => Err(parse_err(format!("unexpected token {t:?}"))),
            None => Err(parse_err("unexpected end of input".into())),
        }
    }
}

/// Parses a polynomial in λ (`l`) and α (`a`).
pub fn parse_bipoly(s: &str) -> Result<BiPoly> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(parse_err("empty polynomial".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(parse_err(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

/// Parses a polynomial in α alone.
pub fn parse_alpha_poly(s: &str) -> Result<AlphaPoly> {
    let p = parse_bipoly(s)?;
    match p.lambda_degree() {
        None => Ok(AlphaPoly::zero()),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(parse_err("expected a polynomial in α only".into())),
    }
}
