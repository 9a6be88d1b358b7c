//! Plain-text polynomial syntax.
//!
//! Grammar (whitespace is ignored between tokens):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER | 'x' | 't' | '(' expr ')'
//! ```
//!
//! Rational literals are written as quotients of integers (`3/4`). Printing
//! lists x-powers in descending order and t-powers in ascending order, with
//! no spaces, so `x^5+(1+9*t)*x^4+33*t*x^3` is a canonical form. Parsing the
//! printed form of any polynomial returns the same polynomial.

use std::fmt;

use num_bigint::BigInt;

use super::poly::{Poly, QPoly, TxPoly, Var};
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// How a coefficient renders as a factor in front of a power of the outer variable.
pub trait CoefficientText: Ring {
    fn render(&self) -> String;
    /// Whether `render` is a single product (so `c*x^k` needs no parentheses).
    fn is_product(&self) -> bool;
}

impl CoefficientText for Rational {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_product(&self) -> bool {
        true
    }
}

impl<R: CoefficientText> CoefficientText for Poly<R> {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_product(&self) -> bool {
        self.term_count() <= 1
    }
}

fn power_text(var: Var, exp: usize) -> String {
    match exp {
        1 => var.to_string(),
        _ => format!("{var}^{exp}"),
    }
}

impl<R: CoefficientText> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var();
        let mut exps: Vec<usize> = (0..self.coeffs().len())
            .filter(|&i| !self.coeffs()[i].is_zero())
            .collect();
        if exps.is_empty() {
            return write!(f, "0");
        }
        if var != Var::T {
            exps.reverse();
        }
        let sole = exps.len() == 1;
        let mut out = String::new();
        for exp in exps {
            let c = &self.coeffs()[exp];
            let term = if exp == 0 {
                if c.is_product() || sole {
                    c.render()
                } else {
                    format!("({})", c.render())
                }
            } else if c.is_one() {
                power_text(var, exp)
            } else if c.negate().is_one() {
                format!("-{}", power_text(var, exp))
            } else if c.is_product() {
                format!("{}*{}", c.render(), power_text(var, exp))
            } else {
                format!("({})*{}", c.render(), power_text(var, exp))
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("ascii digits");
                out.push((start, Token::Int(n)));
            }
            'x' | 't' => {
                out.push((i, Token::Ident(c)));
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((i, Token::Op(c)));
                i += 1;
            }
            _ => {
                return Err(Error::Parse {
                    position: i,
                    message: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Expr {
    Int(BigInt),
    Var(char, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.offset(), message: message.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
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

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Token::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                let Ok(e) = u32::try_from(&n) else {
                    return self.error("exponent too large");
                };
                self.pos += 1;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => self.error("exponent must be a nonnegative integer literal"),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Token::Ident(c)) => {
                self.pos += 1;
                Ok(Expr::Var(c, at))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(inner)
            }
            Some(tok) => self.error(format!("unexpected token {tok:?}")),
            None => self.error("unexpected end of input"),
        }
    }
}

fn parse_expr(src: &str) -> Result<Expr> {
    let tokens = tokenize(src)?;
    let mut parser = Parser { tokens, pos: 0, end: src.len() };
    let expr = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.error("trailing input");
    }
    Ok(expr)
}

/// Target algebra for evaluating a parsed expression.
trait Evaluate: Sized {
    fn integer(n: BigInt) -> Self;
    fn var(name: char, at: usize) -> Result<Self>;
    fn add(self, rhs: Self) -> Self;
    fn sub(self, rhs: Self) -> Self;
    fn mul(self, rhs: Self) -> Self;
    fn div(self, rhs: Self, at: usize) -> Result<Self>;
    fn neg(self) -> Self;
    fn pow(self, e: u32) -> Self;
}

fn evaluate<V: Evaluate>(e: Expr) -> Result<V> {
    Ok(match e {
        Expr::Int(n) => V::integer(n),
        Expr::Var(c, at) => V::var(c, at)?,
        Expr::Neg(a) => evaluate::<V>(*a)?.neg(),
        Expr::Add(a, b) => evaluate::<V>(*a)?.add(evaluate(*b)?),
        Expr::Sub(a, b) => evaluate::<V>(*a)?.sub(evaluate(*b)?),
        Expr::Mul(a, b) => evaluate::<V>(*a)?.mul(evaluate(*b)?),
        Expr::Div(a, b, at) => evaluate::<V>(*a)?.div(evaluate(*b)?, at)?,
        Expr::Pow(a, n) => evaluate::<V>(*a)?.pow(n),
    })
}

fn only_x(name: char, at: usize) -> Result<()> {
    if name == 'x' {
        Ok(())
    } else {
        Err(Error::Parse { position: at, message: format!("variable {name:?} not allowed here") })
    }
}

impl Evaluate for TxPoly {
    fn integer(n: BigInt) -> Self {
        TxPoly::constant(QPoly::constant(Rational::from_integer(n)))
    }
    fn var(name: char, _at: usize) -> Result<Self> {
        Ok(match name {
            'x' => TxPoly::variable(Var::X),
            _ => TxPoly::constant(QPoly::variable(Var::T)),
        })
    }
    fn add(self, rhs: Self) -> Self {
        self + rhs
    }
    fn sub(self, rhs: Self) -> Self {
        self - rhs
    }
    fn mul(self, rhs: Self) -> Self {
        self * rhs
    }
    fn div(self, rhs: Self, at: usize) -> Result<Self> {
        let divisor = rhs
            .to_outer()
            .filter(|p| p.is_constant() && !p.coeffs().is_empty())
            .ok_or_else(|| Error::Parse {
                position: at,
                message: "polynomials may only be divided by nonzero rational constants".into(),
            })?;
        let inv = divisor.coeff(0).recip();
        Ok(self.scale(&QPoly::constant(inv)))
    }
    fn neg(self) -> Self {
        -self
    }
    fn pow(self, e: u32) -> Self {
        Poly::pow(&self, e)
    }
}

impl Evaluate for RatFunc {
    fn integer(n: BigInt) -> Self {
        RatFunc::constant(Rational::from_integer(n))
    }
    fn var(name: char, at: usize) -> Result<Self> {
        only_x(name, at)?;
        Ok(RatFunc::variable(Var::X))
    }
    fn add(self, rhs: Self) -> Self {
        RatFunc::add(&self, &rhs)
    }
    fn sub(self, rhs: Self) -> Self {
        RatFunc::sub(&self, &rhs)
    }
    fn mul(self, rhs: Self) -> Self {
        RatFunc::mul(&self, &rhs)
    }
    fn div(self, rhs: Self, at: usize) -> Result<Self> {
        RatFunc::div(&self, &rhs).map_err(|_| Error::Parse {
            position: at,
            message: "division by zero".into(),
        })
    }
    fn neg(self) -> Self {
        RatFunc::neg(&self)
    }
    fn pow(self, e: u32) -> Self {
        RatFunc::pow(&self, e)
    }
}

/// Parses a polynomial in x with coefficients in ℚ[t].
pub fn parse_tx_poly(src: &str) -> Result<TxPoly> {
    evaluate(parse_expr(src)?)
}

/// Parses a polynomial in x over ℚ; `t` is rejected.
pub fn parse_poly(src: &str) -> Result<QPoly> {
    let tx: TxPoly = evaluate(parse_expr(src)?)?;
    tx.to_outer().ok_or_else(|| Error::Parse {
        position: src.find('t').unwrap_or(0),
        message: "variable 't' not allowed here".into(),
    })
}

/// Parses a rational function in x over ℚ; `t` is rejected.
pub fn parse_ratfunc(src: &str) -> Result<RatFunc> {
    evaluate(parse_expr(src)?)
}
