//! Rational functions over ℚ in canonical reduced form.

use std::fmt;

use super::poly::{QPoly, Var};
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` an integer polynomial of
/// content one with positive leading coefficient. Zero is `0 / 1`.
///
/// Keeping the denominator primitive (instead of monic) preserves the integral
/// shape of expressions such as `x^3/(9*x^2+24*x+16)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.coeffs().is_empty() {
            return Err(Error::DivisionByZero);
        }
        let var = if num.is_constant() { den.var() } else { num.var() };
        if num.coeffs().is_empty() {
            return Ok(RatFunc::zero_in(var));
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let (c, den) = den.primitive_split();
        let num = num.scale(&c.recip());
        Ok(RatFunc { num: num.with_var(var), den: den.with_var(var) })
    }

    pub fn from_poly(p: QPoly) -> Self {
        let var = p.var();
        RatFunc { num: p, den: QPoly::constant(Rational::one()).with_var(var) }
    }

    pub fn zero_in(var: Var) -> Self {
        RatFunc::from_poly(QPoly::zero_in(var))
    }

    pub fn one() -> Self {
        RatFunc::from_poly(QPoly::constant(Rational::one()))
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(QPoly::constant(c))
    }

    pub fn variable(var: Var) -> Self {
        RatFunc::from_poly(QPoly::variable(var))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn var(&self) -> Var {
        if self.num.is_constant() {
            self.den.var()
        } else {
            self.num.var()
        }
    }

    pub fn with_var(self, var: Var) -> Self {
        RatFunc { num: self.num.with_var(var), den: self.den.with_var(var) }
    }

    pub fn is_zero(&self) -> bool {
        self.num.coeffs().is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial this function equals, if its denominator is constant.
    pub fn as_poly(&self) -> Option<QPoly> {
        self.is_polynomial()
            .then(|| self.num.scale(&self.den.coeff(0).recip()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &self.num * &other.den + &other.num * &self.den;
        let den = &self.den * &other.den;
        RatFunc::new(num, den).expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(&self.num * &other.num, &self.den * &other.den)
            .expect("product of nonzero denominators")
    }

    pub fn inv(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul(&RatFunc::constant(c.clone()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        // gcd(num, den) = 1 is preserved by powers
        RatFunc { num: self.num.pow(exp), den: self.den.pow(exp) }
    }

    /// `self(inner)`. The result lives in `inner`'s variable.
    pub fn compose(&self, inner: &RatFunc) -> Result<Self> {
        let d = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let (p, q) = (&inner.num, &inner.den);
        let homogenize = |f: &QPoly| {
            let mut acc = QPoly::zero_in(p.var());
            for (i, c) in f.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = p.pow(i as u32) * q.pow((d - i) as u32);
                acc = acc + term.scale(c);
            }
            acc
        };
        let var = inner.var();
        Ok(RatFunc::new(homogenize(&self.num), homogenize(&self.den))?.with_var(var))
    }

    /// Formal derivative with respect to the function's variable.
    pub fn derivative(&self) -> Self {
        let num = self.num.derivative() * &self.den - &self.num * self.den.derivative();
        let den = self.den.pow(2);
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at) / d)
    }

    /// Returns `(c, m)` when `self == c * var^m` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(Rational, usize)> {
        let p = self.as_poly()?;
        if p.term_count() != 1 {
            return None;
        }
        let m = p.valuation()?;
        Some((p.coeff(m), m))
    }
}

impl From<QPoly> for RatFunc {
    fn from(p: QPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.term_count() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}
