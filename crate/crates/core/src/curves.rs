//! Weierstrass curves `y^2 = p(x)` over ℚ or ℚ[t], maps of the shape
//! `(x, y) -> (f1(x), f2(x) * y)` between them, and the invariant-differential
//! analysis that certifies ramification.

use crate::error::{Error, Result};
use crate::exact::{rat, QPoly, RatFunc, Rational, Ring, TxPoly, Var};

/// `y^2 = rhs(x)`, with `rhs` in ℚ[t][x]. Curves over ℚ simply have
/// t-free coefficients. Only the affine model is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperellipticCurve {
    rhs: TxPoly,
}

impl HyperellipticCurve {
    /// Fails unless `rhs` is nonzero of degree at least three.
    pub fn new(rhs: TxPoly) -> Result<Self> {
        match rhs.degree() {
            None => Err(Error::InvalidCurve("zero right-hand side".into())),
            Some(d) if d < 3 => Err(Error::InvalidCurve(format!("degree {d} is below 3"))),
            Some(_) => Ok(HyperellipticCurve { rhs: rhs.with_var(Var::X) }),
        }
    }

    pub fn over_q(rhs: &QPoly) -> Result<Self> {
        HyperellipticCurve::new(TxPoly::lift(rhs))
    }

    pub fn rhs(&self) -> &TxPoly {
        &self.rhs
    }

    pub fn degree(&self) -> usize {
        self.rhs.degree().expect("nonzero by construction")
    }

    /// `Some(rhs)` when the curve is defined over ℚ.
    pub fn rhs_over_q(&self) -> Option<QPoly> {
        self.rhs.to_outer()
    }

    /// Legendre curve `y^2 = x(x+1)(x+t)`.
    pub fn legendre() -> Self {
        let x = TxPoly::variable(Var::X);
        let x_plus_1 = &x + &TxPoly::one();
        let x_plus_t = &x + &TxPoly::constant(QPoly::variable(Var::T));
        HyperellipticCurve { rhs: x * x_plus_1 * x_plus_t }
    }

    /// Arithmetic genus `floor((deg - 1) / 2)` of the Weierstrass model.
    pub fn genus_arithmetic(&self) -> usize {
        (self.degree() - 1) / 2
    }

    /// Genus of the smooth model. Square factors of the right-hand side are
    /// absorbed into `y`, so only the factors of odd multiplicity count.
    pub fn genus_geometric(&self) -> Result<usize> {
        let rhs = self
            .rhs_over_q()
            .ok_or_else(|| Error::InvalidCurve("geometric genus needs a curve over Q".into()))?;
        let odd = rhs.odd_multiplicity_part()?;
        Ok(odd.degree().unwrap_or(0).saturating_sub(1) / 2)
    }

    /// Substitutes `t := value`.
    pub fn specialize_t(&self, value: &Rational) -> Specialization {
        let rhs = self.rhs.specialize(value);
        let degenerate = match rhs.degree() {
            Some(d) if d >= 1 => rhs.gcd(&rhs.derivative()).map_or(true, |g| !g.is_constant()),
            _ => true,
        };
        let curve = HyperellipticCurve { rhs: TxPoly::lift(&rhs) };
        Specialization { curve, degenerate }
    }
}

/// Result of [`HyperellipticCurve::specialize_t`]. `degenerate` flags a
/// right-hand side with repeated roots (a singular curve); this is a status,
/// not an error, because the singular members are inputs of the
/// degeneration pipeline.
#[derive(Clone, Debug, PartialEq)]
pub struct Specialization {
    pub curve: HyperellipticCurve,
    pub degenerate: bool,
}

/// `(x, y) -> (f1(x), f2(x) * y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverMap {
    pub f1: RatFunc,
    pub f2: RatFunc,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cover {
    pub source: HyperellipticCurve,
    pub target: HyperellipticCurve,
    pub map: CoverMap,
    pub degree: usize,
}

/// Outcome of the formal identity `f2^2 * p_source = p_target(f1)`, checked
/// after clearing denominators: with `f1 = n1/d1`, `f2 = n2/d2` and
/// `k = deg p_target`, `lhs = n2^2 * p_source * d1^k` and
/// `rhs = d2^2 * sum_i q_i * n1^i * d1^(k-i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCertificate {
    pub holds: bool,
    pub lhs: TxPoly,
    pub rhs: TxPoly,
    pub difference: TxPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RamificationReport {
    pub branch_point_x: Rational,
    pub ramification_index: usize,
    /// `lambda` in `f^* (dx/y) = lambda(x) dx/y`.
    pub pullback_coefficient: RatFunc,
    pub vanishing_order_at_origin: usize,
    pub riemann_hurwitz_balanced: bool,
}

impl Cover {
    pub fn verify_identity(&self) -> IdentityCertificate {
        let lift = |p: &QPoly| TxPoly::lift(p);
        let (n1, d1) = (lift(self.map.f1.num()), lift(self.map.f1.den()));
        let (n2, d2) = (lift(self.map.f2.num()), lift(self.map.f2.den()));
        let q = self.target.rhs();
        let k = self.target.degree() as u32;

        let lhs = n2.pow(2) * self.source.rhs() * d1.pow(k);
        let mut homogenized = TxPoly::zero_in(Var::X);
        for (i, qi) in q.coeffs().iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            let term = n1.pow(i as u32) * d1.pow(k - i as u32);
            homogenized = homogenized + term.scale(qi);
        }
        let rhs = d2.pow(2) * homogenized;
        let difference = &lhs - &rhs;
        IdentityCertificate { holds: difference.is_zero(), lhs, rhs, difference }
    }

    /// `lambda = f1' / f2`: the coefficient of `dx/y` in the pullback of the
    /// invariant differential `dx/y` of the target.
    pub fn pullback_invariant_differential(&self) -> Result<RatFunc> {
        if self.map.f2.is_zero() {
            return Err(Error::InvalidCover("f2 is identically zero".into()));
        }
        self.map.f1.derivative().div(&self.map.f2)
    }

    /// Ramification data at the Weierstrass point `(0, 0)` for valid covers
    /// whose pullback coefficient is a monomial `c * x^m` and whose source has
    /// odd degree.
    ///
    /// `x` vanishes to order two at `(0, 0)`, so the pulled-back differential
    /// vanishes to order `2m` there. When `2m = 2g - 2` the whole canonical
    /// degree sits at the origin and the map is unramified elsewhere. The
    /// ramification index is the x-adic valuation of `f1 - f1(0)`.
    pub fn ramification_report(&self) -> Result<RamificationReport> {
        let deg = self.source.degree();
        if deg.is_multiple_of(2) {
            return Err(Error::UnsupportedShape(format!(
                "source degree {deg} is even; expected 2g+1"
            )));
        }
        if !self.verify_identity().holds {
            return Err(Error::InvalidCover("the cover identity does not hold".into()));
        }
        let lambda = self.pullback_invariant_differential()?;
        let Some((_, m)) = lambda.as_monomial() else {
            return Err(Error::UnsupportedShape(format!("pullback coefficient {lambda} is not a monomial")));
        };
        let f1 = &self.map.f1;
        if f1.den().eval(&rat(0)).is_zero() {
            return Err(Error::UnsupportedShape("f1 has a pole at x = 0".into()));
        }
        let branch_point_x = f1.eval(&rat(0))?;
        let index = f1
            .sub(&RatFunc::constant(branch_point_x.clone()))
            .num()
            .valuation()
            .ok_or_else(|| Error::UnsupportedShape("f1 is constant".into()))?;

        let g_source = self.source.genus_arithmetic() as i64;
        let g_target = self.target.genus_arithmetic() as i64;
        let vanishing = 2 * m;
        let balanced =
            2 * g_source - 2 == self.degree as i64 * (2 * g_target - 2) + (index as i64 - 1);
        Ok(RamificationReport {
            branch_point_x,
            ramification_index: index,
            pullback_coefficient: lambda,
            vanishing_order_at_origin: vanishing,
            riemann_hurwitz_balanced: balanced,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, parse_ratfunc, parse_tx_poly, rat};

    fn curve(s: &str) -> HyperellipticCurve {
        HyperellipticCurve::new(parse_tx_poly(s).unwrap()).unwrap()
    }

    fn g2_cover() -> Cover {
        Cover {
            source: curve("x^5+(1+9*t)*x^4+33*t*x^3+40*t*x^2+16*t*x"),
            target: HyperellipticCurve::legendre(),
            map: CoverMap {
                f1: parse_ratfunc("x^3/(3*x+4)^2").unwrap(),
                f2: parse_ratfunc("x*(x+4)/(3*x+4)^3").unwrap(),
            },
            degree: 3,
        }
    }

    fn identity_cover() -> Cover {
        Cover {
            source: HyperellipticCurve::legendre(),
            target: HyperellipticCurve::legendre(),
            map: CoverMap { f1: parse_ratfunc("x").unwrap(), f2: parse_ratfunc("1").unwrap() },
            degree: 1,
        }
    }

    #[test]
    fn rejects_low_degree() {
        assert!(matches!(HyperellipticCurve::new(parse_tx_poly("x^2+1").unwrap()), Err(Error::InvalidCurve(_))));
        assert!(matches!(HyperellipticCurve::new(parse_tx_poly("0").unwrap()), Err(Error::InvalidCurve(_))));
    }

    #[test]
    fn arithmetic_genus() {
        assert_eq!(HyperellipticCurve::legendre().genus_arithmetic(), 1);
        assert_eq!(g2_cover().source.genus_arithmetic(), 2);
        let g3 = curve("x^7+(1+25*t)*x^6+225*t*x^5+760*t*x^4+1200*t*x^3+896*t*x^2+256*t*x");
        assert_eq!(g3.genus_arithmetic(), 3);
    }

    #[test]
    fn geometric_genus() {
        assert_eq!(curve("x^5+x^4").genus_geometric().unwrap(), 0);
        assert_eq!(curve("x^6*(x+1)").genus_geometric().unwrap(), 0);
        assert_eq!(curve("x^3+x^2").genus_geometric().unwrap(), 0);
        assert_eq!(curve("x^3-x").genus_geometric().unwrap(), 1);
        // radical x(x+1)(x+4) would wrongly suggest genus 1
        assert_eq!(curve("x*(x+1)^2*(x+4)^2").genus_geometric().unwrap(), 0);
        assert!(matches!(HyperellipticCurve::legendre().genus_geometric(), Err(Error::InvalidCurve(_))));
    }

    #[test]
    fn specialization() {
        let e0 = HyperellipticCurve::legendre().specialize_t(&rat(0));
        assert_eq!(e0.curve, curve("x^3+x^2"));
        assert!(e0.degenerate);
        let c = g2_cover().source;
        assert_eq!(c.specialize_t(&rat(0)).curve, curve("x^5+x^4"));
        let c1 = c.specialize_t(&rat(1));
        assert_eq!(c1.curve, curve("x^5+10*x^4+33*x^3+40*x^2+16*x"));
        assert!(c1.degenerate);
        let generic = c.specialize_t(&frac(2, 7));
        assert!(!generic.degenerate);
        assert!(!HyperellipticCurve::legendre().specialize_t(&rat(-1)).degenerate);
    }

    #[test]
    fn identity_check() {
        assert!(g2_cover().verify_identity().holds);
        assert!(identity_cover().verify_identity().holds);
        let mut shifted = g2_cover();
        shifted.map.f1 = shifted.map.f1.add(&RatFunc::one());
        let cert = shifted.verify_identity();
        assert!(!cert.holds);
        assert!(!cert.difference.is_zero());
    }

    #[test]
    fn pullback_values() {
        assert_eq!(g2_cover().pullback_invariant_differential().unwrap().to_string(), "3*x");
        assert_eq!(identity_cover().pullback_invariant_differential().unwrap(), RatFunc::one());
        let mut zero = identity_cover();
        zero.map.f2 = RatFunc::zero_in(Var::X);
        assert!(matches!(zero.pullback_invariant_differential(), Err(Error::InvalidCover(_))));
    }

    #[test]
    fn ramification() {
        let r = g2_cover().ramification_report().unwrap();
        assert_eq!(r.ramification_index, 3);
        assert_eq!(r.vanishing_order_at_origin, 2);
        assert!(r.riemann_hurwitz_balanced);
        assert_eq!(r.branch_point_x, rat(0));

        let r1 = identity_cover().ramification_report().unwrap();
        assert_eq!(r1.ramification_index, 1);
        assert_eq!(r1.vanishing_order_at_origin, 0);
        assert!(r1.riemann_hurwitz_balanced);
    }

    #[test]
    fn ramification_rejects_other_shapes() {
        let mut c = g2_cover();
        c.map.f1 = c.map.f1.add(&RatFunc::one());
        assert!(matches!(c.ramification_report(), Err(Error::InvalidCover(_))));

        let even = Cover {
            source: curve("x^4+x+1"),
            target: curve("x^4+x+1"),
            map: CoverMap { f1: parse_ratfunc("x").unwrap(), f2: parse_ratfunc("1").unwrap() },
            degree: 1,
        };
        assert!(matches!(even.ramification_report(), Err(Error::UnsupportedShape(_))));

        // (x, y) -> (x + 1, y) from y^2 = (x+1)^3 - 1 to y^2 = x^3 - 1 has lambda = 1
        // (a monomial), so it is accepted and reports an unramified point
        let shift = Cover {
            source: curve("x^3+3*x^2+3*x"),
            target: curve("x^3-1"),
            map: CoverMap { f1: parse_ratfunc("x+1").unwrap(), f2: parse_ratfunc("1").unwrap() },
            degree: 1,
        };
        let r = shift.ramification_report().unwrap();
        assert_eq!(r.branch_point_x, rat(1));
        assert_eq!(r.ramification_index, 1);
        assert!(r.riemann_hurwitz_balanced);

        // lambda = 2x + 1 would not be a monomial; the even source degree is caught first
        let sq = Cover {
            source: curve("x^6+3*x^5+3*x^4+x^3-1"),
            target: curve("x^3-1"),
            map: CoverMap { f1: parse_ratfunc("x^2+x").unwrap(), f2: parse_ratfunc("1").unwrap() },
            degree: 2,
        };
        assert!(sq.verify_identity().holds);
        assert!(matches!(sq.ramification_report(), Err(Error::UnsupportedShape(_))));
    }
}
