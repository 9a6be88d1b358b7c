//! Dense univariate polynomials over an arbitrary coefficient [`Ring`].
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector. Every polynomial carries a variable
//! tag. Constants are tag-agnostic: they compare equal and combine with
//! polynomials in any variable, while mixing two non-constant polynomials in
//! different variables is a programming error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::rational::{denominator_lcm, numerator_gcd, Rational};
use super::ring::{ExactDivision, Field, Ring};
use crate::error::{Error, Result};

/// Name of the indeterminate of a [`Poly`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    #[default]
    X,
    T,
    U,
    Z,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::T => 't',
            Var::U => 'u',
            Var::Z => 'z',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Clone, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
    var: Var,
}

/// ℚ[x] (or ℚ in any single variable).
pub type QPoly = Poly<Rational>;
/// ℚ[t][x]: polynomials in x whose coefficients are polynomials in t.
pub type TxPoly = Poly<Poly<Rational>>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>, var: Var) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    pub fn zero_in(var: Var) -> Self {
        Poly { coeffs: Vec::new(), var }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c], Var::X)
    }

    /// The polynomial `var` itself.
    pub fn variable(var: Var) -> Self {
        Poly::monomial(R::one(), 1, var)
    }

    pub fn monomial(c: R, exp: usize, var: Var) -> Self {
        let mut coeffs = vec![R::zero(); exp + 1];
        coeffs[exp] = c;
        Poly::new(coeffs, var)
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64], var: Var) -> Self {
        Poly::new(coeffs.iter().map(|&c| R::from_int(c)).collect(), var)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `var^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Largest `k` with `var^k` dividing `self`; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn join_var(&self, other: &Self) -> Var {
        match (self.is_constant(), other.is_constant()) {
            (false, false) => {
                assert_eq!(
                    self.var, other.var,
                    "arithmetic between polynomials in different variables"
                );
                self.var
            }
            (true, false) => other.var,
            _ => self.var,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let var = self.join_var(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(coeffs, var)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::negate).collect(),
            var: self.var,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let var = self.join_var(other);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::zero_in(var);
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Poly::new(out, var)
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.times(c)).collect(), self.var)
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs, self.var)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::constant(R::one()).with_var(self.var);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(v))`, by Horner's rule. The result lives in `inner`'s variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero_in(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc.with_var(inner.var)
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.times(at).plus(c))
    }

    /// Formal derivative with respect to the polynomial's variable.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.times(&R::from_int(i as i64)))
            .collect();
        Poly::new(coeffs, self.var)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect(), self.var)
    }
}

impl<R: ExactDivision> Poly<R> {
    /// Exact division; fails with [`Error::NotDivisible`] when a remainder is left
    /// (or a leading-coefficient quotient does not exist in `R`).
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        let var = self.join_var(divisor);
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return if self.coeffs.is_empty() {
                Ok(Poly::zero_in(var))
            } else {
                Err(Error::NotDivisible)
            };
        }
        let mut quot = vec![R::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + ddeg];
            if top.is_zero() {
                continue;
            }
            let q = top.exact_quotient(dlead).ok_or(Error::NotDivisible)?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].minus(&q.times(d));
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Poly::new(quot, var))
    }
}

impl<R: ExactDivision> ExactDivision for Poly<R> {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        self.exact_div(divisor).ok()
    }
}

impl<R: Field> Poly<R> {
    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let inv = dlead.inverse().ok_or(Error::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        let var = self.join_var(divisor);
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Poly::zero_in(var), self.clone()));
        }
        let mut quot = vec![R::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let q = rem[k + ddeg].times(&inv);
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].minus(&q.times(d));
            }
            quot[k] = q;
        }
        rem.truncate(ddeg);
        Ok((Poly::new(quot, var), Poly::new(rem, var)))
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading().and_then(Field::inverse) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return Err(Error::InvalidInput("gcd of two zero polynomials".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.coeffs.is_empty() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Product of the distinct irreducible factors, monic: `a / gcd(a, a')`.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return Err(Error::InvalidInput("squarefree part of zero".into()));
        }
        if self.is_constant() {
            return Ok(Poly::constant(R::one()).with_var(self.var));
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }

    /// Yun's squarefree decomposition: monic, pairwise coprime, squarefree
    /// `s_1, s_2, ...` with `self = lc * s_1 * s_2^2 * s_3^3 * ...`.
    /// Entry `i` of the result is `s_{i+1}`; trailing trivial factors are dropped.
    pub fn squarefree_decomposition(&self) -> Result<Vec<Self>> {
        if self.coeffs.is_empty() {
            return Err(Error::InvalidInput("squarefree decomposition of zero".into()));
        }
        let one = Poly::constant(R::one()).with_var(self.var);
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative();
        let g = f.gcd(&df)?;
        let mut a = f.exact_div(&g)?;
        let mut b = df.exact_div(&g)?;
        loop {
            let c = b.sub(&a.derivative());
            if c.coeffs.is_empty() {
                out.push(a.monic());
                break;
            }
            let d = a.gcd(&c)?;
            out.push(d.clone());
            a = a.exact_div(&d)?;
            b = c.exact_div(&d)?;
            if a.is_constant() {
                break;
            }
        }
        while out.last().is_some_and(|p| *p == one) {
            out.pop();
        }
        Ok(out)
    }

    /// Product of the factors occurring to an odd power, monic. `y^2 = self`
    /// is birational to `y^2 = odd_part`.
    pub fn odd_multiplicity_part(&self) -> Result<Self> {
        let parts = self.squarefree_decomposition()?;
        let mut acc = Poly::constant(R::one()).with_var(self.var);
        for (i, s) in parts.iter().enumerate() {
            if i % 2 == 0 {
                acc = acc.mul(s);
            }
        }
        Ok(acc)
    }
}

impl Poly<Rational> {
    /// Splits `self = c * p` with `p` an integer polynomial of content one and
    /// positive leading coefficient. Returns `(c, p)`; zero maps to `(0, 0)`.
    pub fn primitive_split(&self) -> (Rational, Self) {
        let Some(lead) = self.leading() else {
            return (Rational::from_integer(0.into()), self.clone());
        };
        let lcm = denominator_lcm(&self.coeffs);
        let scaled = self.scale(&Rational::from_integer(lcm.clone()));
        let mut content = numerator_gcd(&scaled.coeffs);
        if lead.is_negative() {
            content = -content;
        }
        let factor = Rational::new(lcm, content);
        let prim = self.scale(&factor);
        (factor.recip(), prim)
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_bigints(coeffs: Vec<BigInt>, var: Var) -> Self {
        Poly::new(coeffs.into_iter().map(Rational::from_integer).collect(), var)
    }
}

impl Poly<Poly<Rational>> {
    /// Embeds a polynomial over ℚ as one with constant t-coefficients.
    pub fn lift(p: &Poly<Rational>) -> Self {
        Poly::new(p.coeffs.iter().map(|c| Poly::constant(c.clone())).collect(), p.var)
    }

    /// Substitutes `t := value` in every coefficient.
    pub fn specialize(&self, value: &Rational) -> Poly<Rational> {
        Poly::new(self.coeffs.iter().map(|c| c.eval(value)).collect(), self.var)
    }

    /// True when no coefficient mentions the inner variable.
    pub fn is_inner_constant(&self) -> bool {
        self.coeffs.iter().all(Poly::is_constant)
    }

    /// Drops the inner variable; `None` if some coefficient is non-constant.
    pub fn to_outer(&self) -> Option<Poly<Rational>> {
        self.is_inner_constant()
            .then(|| Poly::new(self.coeffs.iter().map(|c| c.coeff(0)).collect(), self.var))
    }

    /// Coefficient of `inner^k` as a polynomial in the outer variable.
    pub fn inner_coeff(&self, k: usize) -> Poly<Rational> {
        Poly::new(self.coeffs.iter().map(|c| c.coeff(k)).collect(), self.var)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero_in(Var::X)
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn plus(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn minus(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn times(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn negate(&self) -> Self {
        Poly::neg(self)
    }
    fn from_int(n: i64) -> Self {
        Poly::constant(R::from_int(n))
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.var == other.var || self.is_constant())
    }
}

impl<R: Ring + Eq> Eq for Poly<R> {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl<R: Ring> $tr<&Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: &Poly<R>) -> Poly<R> {
                Poly::$method(self, rhs)
            }
        }
        impl<R: Ring> $tr<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                Poly::$method(&self, &rhs)
            }
        }
        impl<R: Ring> $tr<&Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: &Poly<R>) -> Poly<R> {
                Poly::$method(&self, rhs)
            }
        }
        impl<R: Ring> $tr<Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                Poly::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::neg(&self)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn qx(c: &[i64]) -> QPoly {
        Poly::from_ints(c, Var::X)
    }

    #[test]
    fn ring_arithmetic() {
        assert_eq!(&qx(&[1, 1]) * &qx(&[-1, 1]), qx(&[-1, 0, 1]));
        assert_eq!(qx(&[0, 0, 1]).compose(&qx(&[1, 1])), qx(&[1, 2, 1]));
        assert_eq!(qx(&[0, 3, 0, 1]).exact_div(&qx(&[0, 1])).unwrap(), qx(&[3, 0, 1]));
        assert_eq!(qx(&[1, 0, 1]).exact_div(&qx(&[0, 1])), Err(Error::NotDivisible));
        assert_eq!(qx(&[1]).exact_div(&qx(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn zero_has_no_degree() {
        let z = qx(&[0, 0]);
        assert_eq!(z.degree(), None);
        assert!(z.coeffs().is_empty());
        assert_eq!(qx(&[5]).degree(), Some(0));
    }

    #[test]
    fn constants_ignore_variable_tag() {
        let c = QPoly::constant(rat(3));
        assert_eq!(c.clone().with_var(Var::T), c);
        let x = QPoly::variable(Var::X);
        let t = QPoly::variable(Var::T);
        assert_ne!(x, t);
        assert_eq!((&c * &t).var(), Var::T);
    }

    #[test]
    #[should_panic(expected = "different variables")]
    fn mixing_variables_panics() {
        let _ = QPoly::variable(Var::X) + QPoly::variable(Var::T);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(qx(&[-1, 0, 1]).gcd(&qx(&[-1, 1])).unwrap(), qx(&[-1, 1]));
        assert_eq!(qx(&[0, 1]).gcd(&qx(&[1, 1])).unwrap(), qx(&[1]));
        assert_eq!(
            qx(&[0, 0, 0, 0, 1, 1]).gcd(&qx(&[0, 0, 0, 0, 1])).unwrap(),
            qx(&[0, 0, 0, 0, 1])
        );
        assert!(matches!(qx(&[]).gcd(&qx(&[])), Err(Error::InvalidInput(_))));
        assert_eq!(qx(&[]).gcd(&qx(&[0, 2])).unwrap(), qx(&[0, 1]));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(qx(&[0, 0, 0, 0, 1, 1]).squarefree_part().unwrap(), qx(&[0, 1, 1]));
        assert_eq!(qx(&[-1, 0, 1]).squarefree_part().unwrap(), qx(&[-1, 0, 1]));
        assert_eq!(
            qx(&[0, 0, 0, 0, 0, 0, 1, 1]).squarefree_part().unwrap(),
            qx(&[0, 1, 1])
        );
        assert!(matches!(qx(&[]).squarefree_part(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn yun_decomposition() {
        // 2 x^3 (x+1)^2 (x-2)
        let x = qx(&[0, 1]);
        let f = qx(&[2]) * x.pow(3) * qx(&[1, 1]).pow(2) * qx(&[-2, 1]);
        let parts = f.squarefree_decomposition().unwrap();
        assert_eq!(parts, vec![qx(&[-2, 1]), qx(&[1, 1]), qx(&[0, 1])]);
        assert_eq!(f.odd_multiplicity_part().unwrap(), qx(&[0, -2, 1]));
    }

    #[test]
    fn primitive_split_normalizes_sign_and_content() {
        let p = Poly::new(vec![rat(-4), crate::exact::frac(-2, 3)], Var::X);
        let (c, prim) = p.primitive_split();
        assert_eq!(prim, qx(&[6, 1]));
        assert_eq!(prim.scale(&c), p);
    }

    #[test]
    fn valuation_and_shift() {
        assert_eq!(qx(&[0, 0, 3, 1]).valuation(), Some(2));
        assert_eq!(qx(&[1, 1]).shift(2), qx(&[0, 0, 1, 1]));
    }

    #[test]
    fn nested_exact_division() {
        // (x + t)(x - t) / (x + t) over Q[t][x]
        let t = QPoly::variable(Var::T);
        let a = TxPoly::new(vec![t.clone(), QPoly::constant(rat(1))], Var::X);
        let b = TxPoly::new(vec![-&t, QPoly::constant(rat(1))], Var::X);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.specialize(&rat(2)), qx(&[-4, 0, 1]));
    }
}
