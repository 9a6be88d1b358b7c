//! The explicit genus-g family: for every `g >= 1` the curve
//! `C_t: y^2 = x(x+1)(x^(2g-1) + t j(x)^2)` maps with degree `2g-1` onto
//! `E_t: y^2 = x(x+1)(x+t)` by `(x, y) -> (x^(2g-1)/j^2, x^(g-1) k / j^3 * y)`,
//! totally ramified over `(0, 0)`.
//!
//! Here `j = sum_i C(2g-1, 2i) (x+1)^i` and `k = sum_i C(2g-1, 2i+1) (x+1)^i`,
//! i.e. with `u^2 = x+1`, `j + u k = (1+u)^(2g-1)`.

use crate::curves::{Cover, CoverMap, HyperellipticCurve, IdentityCertificate, RamificationReport};
use crate::error::{Error, Result};
use crate::exact::{binomial, QPoly, RatFunc, Rational, Ring, TxPoly, Var};

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyInstance {
    pub genus: usize,
    pub j: QPoly,
    pub k: QPoly,
    pub cover: Cover,
}

fn check_genus(g: i64) -> Result<u64> {
    if g < 1 {
        Err(Error::InvalidGenus(g))
    } else {
        Ok(g as u64)
    }
}

/// `sum_{i < g} C(2g-1, 2i + parity) (x+1)^i`, expanded in x.
fn binomial_sum(g: u64, parity: u64) -> QPoly {
    let x_plus_1 = QPoly::from_ints(&[1, 1], Var::X);
    let mut acc = QPoly::zero_in(Var::X);
    for i in (0..g).rev() {
        let c = Rational::from_integer(binomial(2 * g - 1, 2 * i + parity));
        acc = acc * &x_plus_1 + QPoly::constant(c);
    }
    acc
}

/// `j(x) = sum_{i=0}^{g-1} C(2g-1, 2i) (x+1)^i`.
pub fn j_poly(g: i64) -> Result<QPoly> {
    Ok(binomial_sum(check_genus(g)?, 0))
}

/// `k(x) = sum_{i=0}^{g-1} C(2g-1, 2i+1) (x+1)^i`.
pub fn k_poly(g: i64) -> Result<QPoly> {
    Ok(binomial_sum(check_genus(g)?, 1))
}

/// `x(x+1)(x^(2g-1) + t j^2)` in ℚ[t][x].
fn source_rhs(g: usize, j: &QPoly) -> TxPoly {
    let x = TxPoly::variable(Var::X);
    let x_plus_1 = &x + &TxPoly::one();
    let t = TxPoly::constant(QPoly::variable(Var::T));
    let inner = TxPoly::monomial(QPoly::one(), 2 * g - 1, Var::X) + t * TxPoly::lift(&j.pow(2));
    x * x_plus_1 * inner
}

pub fn build_family(g: i64) -> Result<FamilyInstance> {
    let genus = check_genus(g)? as usize;
    let j = j_poly(g)?;
    let k = k_poly(g)?;
    let n = 2 * genus - 1;
    let f1 = RatFunc::new(QPoly::monomial(Rational::one(), n, Var::X), j.pow(2))?;
    let f2 = RatFunc::new(k.shift(genus - 1), j.pow(3))?;
    let cover = Cover {
        source: HyperellipticCurve::new(source_rhs(genus, &j))?,
        target: HyperellipticCurve::legendre(),
        map: CoverMap { f1, f2 },
        degree: n,
    };
    Ok(FamilyInstance { genus, j, k, cover })
}

/// Exact checks of the two polynomial identities behind the family:
/// `(x+1) k^2 = j^2 + x^(2g-1)` and `(2g-1) j - 2x j' = (2g-1) k`.
#[derive(Clone, Debug, PartialEq)]
pub struct CompanionCertificate {
    pub norm_identity: bool,
    pub derivative_identity: bool,
}

impl CompanionCertificate {
    pub fn holds(&self) -> bool {
        self.norm_identity && self.derivative_identity
    }
}

pub fn companion_identities(g: i64) -> Result<CompanionCertificate> {
    let genus = check_genus(g)? as usize;
    let (j, k) = (j_poly(g)?, k_poly(g)?);
    Ok(check_companions(genus, &j, &k))
}

pub(crate) fn check_companions(genus: usize, j: &QPoly, k: &QPoly) -> CompanionCertificate {
    let n = 2 * genus - 1;
    let x = QPoly::variable(Var::X);
    let x_plus_1 = &x + &QPoly::one();
    let norm = x_plus_1 * k.pow(2) == j.pow(2) + x.pow(n as u32);
    let nn = QPoly::constant(Rational::from_int(n as i64));
    let lhs = j * &nn - (&x * j.derivative()).scale(&Rational::from_int(2));
    let derivative = lhs == k * &nn;
    CompanionCertificate { norm_identity: norm, derivative_identity: derivative }
}

/// Everything that certifies a [`FamilyInstance`].
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyCertificate {
    pub identity: IdentityCertificate,
    pub pullback: RatFunc,
    pub ramification: RamificationReport,
    pub companions: CompanionCertificate,
}

impl FamilyCertificate {
    /// Identity, total ramification, the pullback law `(2g-1) x^(g-1)` and
    /// both companion identities.
    pub fn all_pass(&self, genus: usize) -> bool {
        let n = 2 * genus - 1;
        let expected = RatFunc::from_poly(QPoly::monomial(Rational::from_int(n as i64), genus - 1, Var::X));
        self.identity.holds
            && self.pullback == expected
            && self.ramification.ramification_index == n
            && self.ramification.vanishing_order_at_origin == 2 * genus - 2
            && self.ramification.riemann_hurwitz_balanced
            && self.companions.holds()
    }
}

impl FamilyInstance {
    pub fn certify(&self) -> Result<FamilyCertificate> {
        Ok(FamilyCertificate {
            identity: self.cover.verify_identity(),
            pullback: self.cover.pullback_invariant_differential()?,
            ramification: self.cover.ramification_report()?,
            companions: check_companions(self.genus, &self.j, &self.k),
        })
    }
}
