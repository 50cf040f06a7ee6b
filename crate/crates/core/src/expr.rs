//! Shared text syntax for scalars and algebra elements.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/' denom) unary)*
//! denom   := power (NAME ('^' int)?)*        juxtaposed factors, e.g. "/ q qb s2^2"
//! unary   := '-' unary | power
//! power   := primary ('^' '-'? int)?
//! primary := INT | NAME | NAME '[' int (',' int)* ']' | NAME '(' expr ')' | '(' expr ')'
//! ```

use std::fmt;

use thiserror::Error;

use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    BadChar(char, usize),
    #[error("unexpected end of input")]
    Eof,
    #[error("unexpected token {0} at offset {1}")]
    Unexpected(String, usize),
    #[error("unknown symbol {0}")]
    Unknown(String),
    #[error("{0}")]
    Semantic(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i128),
    Name(String),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(i) => write!(f, "{i}"),
            Tok::Name(s) => write!(f, "{s}"),
            Tok::Sym(c) => write!(f, "{c:?}"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            let v = s.parse::<i128>().map_err(|_| ParseError::Semantic(format!("integer {s} out of range")))?;
            out.push((Tok::Int(v), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((Tok::Name(chars[start..i].iter().map(|&(_, c)| c).collect()), pos));
        } else if "+-*/^()[],".contains(c) {
            out.push((Tok::Sym(c), pos));
            i += 1;
        } else {
            return Err(ParseError::BadChar(c, pos));
        }
    }
    Ok(out)
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(i128),
    Name(String),
    Indexed(String, Vec<i64>),
    Call(String, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(t, _)| t)
    }

    fn next(&mut self) -> Result<Tok, ParseError> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone()).ok_or(ParseError::Eof)?;
        self.pos += 1;
        Ok(t)
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.pos) {
            Some((t, p)) => ParseError::Unexpected(t.to_string(), *p),
            None => ParseError::Eof,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        match self.next()? {
            Tok::Int(v) => {
                let v = i64::try_from(v).map_err(|_| ParseError::Semantic("exponent too large".into()))?;
                Ok(if neg { -v } else { v })
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected())
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                let mut den = self.power()?;
                while let Some(Tok::Name(_)) = self.peek() {
                    if matches!(self.peek_at(1), Some(Tok::Sym('(')) | Some(Tok::Sym('['))) {
                        break;
                    }
                    den = Expr::Mul(Box::new(den), Box::new(self.power()?));
                }
                lhs = Expr::Div(Box::new(lhs), Box::new(den));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.eat('^') {
            let e = self.int()?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.next()? {
            Tok::Int(v) => Ok(Expr::Int(v)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Name(name) => {
                if self.eat('[') {
                    let mut idx = vec![self.int()?];
                    while self.eat(',') {
                        idx.push(self.int()?);
                    }
                    self.expect(']')?;
                    Ok(Expr::Indexed(name, idx))
                } else if self.eat('(') {
                    let e = self.expr()?;
                    self.expect(')')?;
                    Ok(Expr::Call(name, Box::new(e)))
                } else {
                    Ok(Expr::Name(name))
                }
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected())
            }
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

/// Scalar constant names understood by every interpreter.
pub fn scalar_constant(name: &str) -> Option<Scalar> {
    Some(match name {
        "q" => Scalar::q(),
        "qb" => Scalar::qbar(),
        "lam" => Scalar::lambda(),
        "rho" => Scalar::rho(),
        "zeta" => Scalar::zeta(),
        "zetab" => Scalar::zeta_bar(),
        "s2" => Scalar::sigma2(),
        "vs" => Scalar::varsigma(),
        _ => return None,
    })
}

/// Evaluation target for [`Expr`].
pub trait Interp {
    type Val: Clone;
    fn scalar(&self, s: Scalar) -> Self::Val;
    fn atom(&self, name: &str, index: Option<&[i64]>) -> Result<Self::Val, ParseError>;
    fn call(&self, name: &str, _arg: &Expr) -> Result<Self::Val, ParseError> {
        Err(ParseError::Unknown(format!("{name}(...)")))
    }
    fn add(&self, a: &Self::Val, b: &Self::Val) -> Self::Val;
    fn mul(&self, a: &Self::Val, b: &Self::Val) -> Self::Val;
    fn scale(&self, a: &Self::Val, s: &Scalar) -> Self::Val;
    fn as_scalar(&self, v: &Self::Val) -> Option<Scalar>;
    /// Multiplicative inverse of a non-scalar value, when one exists.
    fn inverse(&self, _v: &Self::Val) -> Option<Self::Val> {
        None
    }
}

pub fn eval<I: Interp>(e: &Expr, it: &I) -> Result<I::Val, ParseError> {
    Ok(match e {
        Expr::Int(v) => {
            let v = i64::try_from(*v).map_err(|_| ParseError::Semantic("integer out of range".into()))?;
            it.scalar(Scalar::int(v))
        }
        Expr::Name(n) => match scalar_constant(n) {
            Some(s) => it.scalar(s),
            None => it.atom(n, None)?,
        },
        Expr::Indexed(n, idx) => it.atom(n, Some(idx))?,
        Expr::Call(n, arg) => it.call(n, arg)?,
        Expr::Add(a, b) => it.add(&eval(a, it)?, &eval(b, it)?),
        Expr::Sub(a, b) => {
            let b = it.scale(&eval(b, it)?, &Scalar::int(-1));
            it.add(&eval(a, it)?, &b)
        }
        Expr::Mul(a, b) => it.mul(&eval(a, it)?, &eval(b, it)?),
        Expr::Div(a, b) => {
            let d = eval(b, it)?;
            let d = it.as_scalar(&d).ok_or_else(|| ParseError::Semantic("division by a non-scalar".into()))?;
            it.scale(&eval(a, it)?, &d.inv()?)
        }
        Expr::Neg(a) => it.scale(&eval(a, it)?, &Scalar::int(-1)),
        Expr::Pow(a, n) => {
            let base = eval(a, it)?;
            if *n < 0 {
                match it.as_scalar(&base) {
                    Some(s) => it.scalar(s.powi(*n)?),
                    None => {
                        let inv = it
                            .inverse(&base)
                            .ok_or_else(|| ParseError::Semantic("negative power of a non-invertible element".into()))?;
                        let mut acc = it.scalar(Scalar::one());
                        for _ in 0..n.unsigned_abs() {
                            acc = it.mul(&acc, &inv);
                        }
                        acc
                    }
                }
            } else {
                let mut acc = it.scalar(Scalar::one());
                for _ in 0..*n {
                    acc = it.mul(&acc, &base);
                }
                acc
            }
        }
    })
}

struct ScalarInterp;

impl Interp for ScalarInterp {
    type Val = Scalar;
    fn scalar(&self, s: Scalar) -> Scalar {
        s
    }
    fn atom(&self, name: &str, _: Option<&[i64]>) -> Result<Scalar, ParseError> {
        Err(ParseError::Unknown(name.to_string()))
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn scale(&self, a: &Scalar, s: &Scalar) -> Scalar {
        a * s
    }
    fn as_scalar(&self, v: &Scalar) -> Option<Scalar> {
        Some(v.clone())
    }
}

impl std::str::FromStr for Scalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Scalar, ParseError> {
        eval(&parse_expr(s)?, &ScalarInterp)
    }
}
