//! Text front end: rational-function expressions in `x` and `t`.
//!
//! Grammar, whitespace ignored between tokens:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | base ('^' int)?
//! base   := int | 'x' | 't' | '(' expr ')'
//! int    := ['-'] digit+
//! ```
//!
//! A signed `int` is only meaningful as an exponent (`x^-2`); elsewhere a
//! leading minus is unary negation.

mod print;

use num_bigint::BigInt;
use std::fmt;
use thiserror::Error;

use crate::arith::{RatFun, TFrac};
use crate::error::ArithError;

pub use print::print;

/// Largest accepted exponent magnitude.
pub const MAX_EXPONENT: i64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    pub fn int(v: i64) -> Self {
        Expr::Int(v.into())
    }
    pub fn x() -> Self {
        Expr::Var(Var::X)
    }
    pub fn t() -> Self {
        Expr::Var(Var::T)
    }
    pub fn pow(a: Expr, e: i64) -> Self {
        Expr::Pow(Box::new(a), e)
    }
}

impl std::ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

macro_rules! expr_binop {
    ($imp:ident, $method:ident, $variant:ident) => {
        impl std::ops::$imp for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

expr_binop!(Add, add, Add);
expr_binop!(Sub, sub, Sub);
expr_binop!(Mul, mul, Mul);
expr_binop!(Div, div, Div);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    Empty,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Empty => "empty input",
        })
    }
}

/// Parse failure with a 0-based character position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at position {position}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero in expression")]
    DivisionByZero,
    #[error("exponent {0} out of range")]
    ExponentRange(i64),
}

/// Either stage of turning text into a [`RatFun`].
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "{v}"),
            Tok::X => f.write_str("x"),
            Tok::T => f.write_str("t"),
            Tok::Plus => f.write_str("+"),
            Tok::Minus => f.write_str("-"),
            Tok::Star => f.write_str("*"),
            Tok::Slash => f.write_str("/"),
            Tok::Caret => f.write_str("^"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'x' => Tok::X,
            't' => Tok::T,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().unwrap()), start));
                continue;
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::Lexical,
                    position: i,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            kind: ParseErrorKind::Syntax,
            position: self.here(),
            message,
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found '{t}'")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = lhs + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = lhs - self.term()?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = lhs * self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    lhs = lhs / self.factor()?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = self.exponent()?;
        if self.peek() == Some(&Tok::Caret) {
            return Err(
                self.error("chained exponents are not supported; parenthesize the base".into())
            );
        }
        Ok(Expr::pow(base, exp))
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let negative = self.peek() == Some(&Tok::Minus);
        if negative {
            self.pos += 1;
        }
        let at = self.here();
        let Some(Tok::Int(v)) = self.peek().cloned() else {
            return Err(self.unexpected("integer exponent"));
        };
        self.pos += 1;
        let v = if negative { -v } else { v };
        i64::try_from(&v)
            .ok()
            .filter(|e| e.abs() <= MAX_EXPONENT)
            .ok_or_else(|| ParseError {
                kind: ParseErrorKind::Syntax,
                position: at,
                message: format!("exponent {v} exceeds {MAX_EXPONENT} in magnitude"),
            })
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Some(Tok::X) => {
                self.pos += 1;
                Ok(Expr::x())
            }
            Some(Tok::T) => {
                self.pos += 1;
                Ok(Expr::t())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, 'x', 't' or '('")),
        }
    }
}

/// Parses `text` into an expression tree.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError {
            kind: ParseErrorKind::Empty,
            position: 0,
            message: "no expression given".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

/// Evaluates an expression to its canonical rational function.
pub fn eval(e: &Expr) -> Result<RatFun, EvalError> {
    Ok(match e {
        Expr::Int(v) => RatFun::from_tfrac(TFrac::from_rational(
            crate::arith::BigRational::from_integer(v.clone()),
        )),
        Expr::Var(Var::X) => RatFun::x(),
        Expr::Var(Var::T) => RatFun::t(),
        Expr::Neg(a) => -eval(a)?,
        Expr::Add(a, b) => &eval(a)? + &eval(b)?,
        Expr::Sub(a, b) => &eval(a)? - &eval(b)?,
        Expr::Mul(a, b) => &eval(a)? * &eval(b)?,
        Expr::Div(a, b) => eval(a)?
            .checked_div(&eval(b)?)
            .map_err(|_| EvalError::DivisionByZero)?,
        Expr::Pow(a, k) => eval(a)?.pow(*k).map_err(|err| match err {
            ArithError::DivisionByZero => EvalError::DivisionByZero,
            _ => EvalError::ExponentRange(*k),
        })?,
    })
}

/// `parse` followed by `eval`.
pub fn parse_ratfun(text: &str) -> Result<RatFun, ExprError> {
    Ok(eval(&parse(text)?)?)
}

impl std::str::FromStr for RatFun {
    type Err = ExprError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ratfun(s)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

impl fmt::Display for TFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(&RatFun::from_tfrac(self.clone())))
    }
}
