//! Rediscovering the family from its degenerate member.
//!
//! At `t = 0` the Legendre curve becomes the nodal cubic `y^2 = x^3 + x^2` and
//! the genus-g source becomes `y^2 = x^(2g)(x+1)`. Both are rational, so a
//! cover between them is a map of projective lines branched only over the
//! two preimages `±1` of the node: a conjugate of `z -> z^n`. Pushing that map
//! back through the normalizations gives the degenerate cover, and a
//! first-order deformation in `t` of curve and map yields a linear system
//! whose solution is checked afterwards to be exact in `t`.

use std::collections::BTreeMap;

use crate::curves::{Cover, CoverMap, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::exact::{LinearSystem, Poly, QPoly, RatFunc, Rational, Ring, SolveOutcome, TxPoly, Var};
use crate::family::FamilyInstance;

/// A normalization `u -> (x(u), y(u))` of a singular Weierstrass curve.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametrizedCurve {
    pub x_of_u: QPoly,
    pub y_of_u: QPoly,
}

impl ParametrizedCurve {
    /// Whether `y(u)^2 = rhs(x(u))` identically.
    pub fn satisfies(&self, rhs: &QPoly) -> bool {
        self.y_of_u.pow(2) == rhs.compose(&self.x_of_u)
    }
}

fn u_poly(c: &[i64]) -> QPoly {
    QPoly::from_ints(c, Var::U)
}

fn x_poly(c: &[i64]) -> QPoly {
    QPoly::from_ints(c, Var::X)
}

fn check_genus(g: i64) -> Result<usize> {
    if g < 2 {
        Err(Error::InvalidGenus(g))
    } else {
        Ok(g as usize)
    }
}

/// `x^3 + x^2`.
pub fn nodal_cubic() -> QPoly {
    x_poly(&[0, 0, 1, 1])
}

/// `x^(2g) (x+1)`.
pub fn degenerate_source_rhs(g: usize) -> QPoly {
    QPoly::monomial(Rational::one(), 2 * g, Var::X) * x_poly(&[1, 1])
}

/// `u -> (u^2 - 1, u^3 - u)`, the normalization of `y^2 = x^3 + x^2`.
pub fn normalize_nodal_cubic() -> ParametrizedCurve {
    let pc = ParametrizedCurve { x_of_u: u_poly(&[-1, 0, 1]), y_of_u: u_poly(&[0, -1, 0, 1]) };
    debug_assert!(pc.satisfies(&nodal_cubic()));
    pc
}

/// `u -> (u^2 - 1, u (u^2 - 1)^g)`, the normalization of `y^2 = x^(2g)(x+1)`.
pub fn normalize_degenerate_source(g: i64) -> Result<ParametrizedCurve> {
    let g = check_genus(g)?;
    let x_of_u = u_poly(&[-1, 0, 1]);
    let y_of_u = u_poly(&[0, 1]) * x_of_u.pow(g as u32);
    let pc = ParametrizedCurve { x_of_u, y_of_u };
    if !pc.satisfies(&degenerate_source_rhs(g)) {
        return Err(Error::Pipeline("source normalization does not parametrize the curve".into()));
    }
    Ok(pc)
}

/// The degree-`n` map of the projective line branched only over `±1`:
/// `z^n` conjugated by `z -> (1+z)/(1-z)`, i.e.
/// `((1+z)^n - (1-z)^n) / ((1+z)^n + (1-z)^n)`.
pub fn two_branch_map(n: i64) -> Result<RatFunc> {
    if n < 1 || n % 2 == 0 {
        return Err(Error::InvalidDegree(n));
    }
    let plus = QPoly::from_ints(&[1, 1], Var::Z).pow(n as u32);
    let minus = QPoly::from_ints(&[1, -1], Var::Z).pow(n as u32);
    RatFunc::new(&plus - &minus, &plus + &minus)
}

/// `sum_i c_(2i + parity) w^i` for the coefficients `c` of `p`, failing if
/// `p` has a term of the other parity.
fn parity_part(p: &QPoly, parity: usize) -> Result<QPoly> {
    if p.coeffs().iter().enumerate().any(|(i, c)| i % 2 != parity && !c.is_zero()) {
        return Err(Error::Pipeline(format!("{p} is not {}", if parity == 0 { "even" } else { "odd" })));
    }
    Ok(QPoly::new(p.coeffs().iter().skip(parity).step_by(2).cloned().collect(), Var::X))
}

/// The degenerate cover together with the polynomial pieces the deformation
/// ansatz perturbs: `f1 = numerator / denominator^2`,
/// `f2 = f2_numerator / denominator^3`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegenerateCover {
    pub genus: usize,
    pub cover: Cover,
    pub numerator: QPoly,
    pub denominator: QPoly,
    pub f2_numerator: QPoly,
}

/// Builds the cover `y^2 = x^(2g)(x+1)  ->  y^2 = x^3 + x^2` by composing the
/// source near-inverse `(x, y) -> y/x^g`, the two-branch map of degree
/// `2g - 1` and the normalization of the nodal cubic.
pub fn degenerate_cover(g: i64) -> Result<DegenerateCover> {
    let genus = check_genus(g)?;
    let n = 2 * genus - 1;
    let phi = two_branch_map(n as i64)?;
    let source_norm = normalize_degenerate_source(g)?;
    let target_norm = normalize_nodal_cubic();

    // On the source z = y/x^g satisfies z^2 = x + 1. phi is odd, phi = z P(z^2)/Q(z^2),
    // so phi^2 and phi/z are functions of x alone.
    let x_plus_1 = x_poly(&[1, 1]);
    let p = parity_part(phi.num(), 1)?.compose(&x_plus_1);
    let q = parity_part(phi.den(), 0)?.compose(&x_plus_1);
    let phi_sq = RatFunc::new(&x_plus_1 * p.pow(2), q.pow(2))?;
    let phi_over_z = RatFunc::new(p, q.clone())?;

    // x_E = phi^2 - 1 and y_E = phi (phi^2 - 1) = (phi/z) x_E y / x^g
    let f1 = phi_sq.sub(&RatFunc::one());
    let x_pow_g = RatFunc::from_poly(QPoly::monomial(Rational::one(), genus, Var::X));
    let f2 = phi_over_z.mul(&f1).div(&x_pow_g)?;

    let cover = Cover {
        source: HyperellipticCurve::over_q(&degenerate_source_rhs(genus))?,
        target: HyperellipticCurve::over_q(&nodal_cubic())?,
        map: CoverMap { f1, f2 },
        degree: n,
    };
    if !cover.verify_identity().holds {
        return Err(Error::Pipeline("degenerate map does not satisfy the cover identity".into()));
    }
    check_closure(&cover.map, &phi, &source_norm, &target_norm, genus)?;

    let (_, denominator) = q.primitive_split();
    let as_poly = |r: RatFunc, what: &str| {
        r.as_poly().ok_or_else(|| Error::Pipeline(format!("{what} is not a polynomial")))
    };
    let d = RatFunc::from_poly(denominator.clone());
    let numerator = as_poly(cover.map.f1.mul(&d.pow(2)), "f1 * denominator^2")?;
    let f2_numerator = as_poly(cover.map.f2.mul(&d.pow(3)), "f2 * denominator^3")?;
    Ok(DegenerateCover { genus, cover, numerator, denominator, f2_numerator })
}

/// Checks that the square of normalizations commutes:
/// `f1(x(u)) = x_E(phi(u))`, `f2(x(u)) y(u) = y_E(phi(u))`, and that
/// `y/x^g` inverts the source normalization.
fn check_closure(
    map: &CoverMap,
    phi: &RatFunc,
    source: &ParametrizedCurve,
    target: &ParametrizedCurve,
    genus: usize,
) -> Result<()> {
    let phi_u = phi.clone().with_var(Var::U);
    let xs = RatFunc::from_poly(source.x_of_u.clone());
    let ys = RatFunc::from_poly(source.y_of_u.clone());
    let lhs_x = map.f1.compose(&xs)?;
    let rhs_x = RatFunc::from_poly(target.x_of_u.clone()).compose(&phi_u)?;
    let lhs_y = map.f2.compose(&xs)?.mul(&ys);
    let rhs_y = RatFunc::from_poly(target.y_of_u.clone()).compose(&phi_u)?;
    let near_inverse = ys.div(&xs.pow(genus as u32))?;
    if lhs_x != rhs_x || lhs_y != rhs_y {
        return Err(Error::Pipeline("normalization square does not commute".into()));
    }
    if near_inverse != RatFunc::variable(Var::U) {
        return Err(Error::Pipeline("y/x^g does not invert the source normalization".into()));
    }
    Ok(())
}

/// Whether the normalization square commutes for genus `g`.
pub fn pipeline_closes(g: i64) -> Result<bool> {
    match degenerate_cover(g) {
        Ok(_) => Ok(true),
        Err(Error::Pipeline(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `base + t * (constant + sum_i coeff_i * unknown_i) + O(t^2)`.
///
/// Products of two order-t parts are O(t^2) and dropped, so unknowns only
/// ever appear linearly.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct FirstOrder {
    base: Rational,
    constant: Rational,
    terms: BTreeMap<usize, Rational>,
}

impl FirstOrder {
    fn scalar(base: Rational) -> Self {
        FirstOrder { base, constant: Rational::zero(), terms: BTreeMap::new() }
    }

    /// `base + t * constant`.
    fn affine(base: Rational, constant: Rational) -> Self {
        FirstOrder { base, constant, terms: BTreeMap::new() }
    }

    /// `base + t * unknown_index`.
    fn with_unknown(base: Rational, index: usize) -> Self {
        FirstOrder { base, constant: Rational::zero(), terms: BTreeMap::from([(index, Rational::one())]) }
    }

    fn scale_order_t(&self, c: &Rational) -> (Rational, BTreeMap<usize, Rational>) {
        if c.is_zero() {
            return (Rational::zero(), BTreeMap::new());
        }
        (&self.constant * c, self.terms.iter().map(|(&k, v)| (k, v * c)).collect())
    }
}

fn merge(mut a: BTreeMap<usize, Rational>, b: BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
    for (k, v) in b {
        let e = a.entry(k).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            a.remove(&k);
        }
    }
    a
}

impl Ring for FirstOrder {
    fn zero() -> Self {
        FirstOrder::scalar(Rational::zero())
    }
    fn one() -> Self {
        FirstOrder::scalar(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.constant.is_zero() && self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        FirstOrder {
            base: &self.base + &other.base,
            constant: &self.constant + &other.constant,
            terms: merge(self.terms.clone(), other.terms.clone()),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn times(&self, other: &Self) -> Self {
        let (c1, t1) = self.scale_order_t(&other.base);
        let (c2, t2) = other.scale_order_t(&self.base);
        FirstOrder { base: &self.base * &other.base, constant: c1 + c2, terms: merge(t1, t2) }
    }
    fn negate(&self) -> Self {
        FirstOrder {
            base: -&self.base,
            constant: -&self.constant,
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
    fn from_int(n: i64) -> Self {
        FirstOrder::scalar(Rational::from_int(n))
    }
}

/// Which coefficient an unknown perturbs at order `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// Coefficient of `x^e` in the source curve.
    Curve(usize),
    /// Coefficient of `x^e` in the common denominator of the map.
    Denominator(usize),
    /// Coefficient of `x^e` in the numerator of `f2`.
    F2Numerator(usize),
}

impl Slot {
    pub fn is_map(self) -> bool {
        !matches!(self, Slot::Curve(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Unknown {
    pub name: String,
    pub slot: Slot,
}

/// First-order perturbation of the degenerate cover:
///
/// * source `x^(2g+1) + (1 + a_1 t) x^(2g) + a_2 t x^(2g-1) + ... + a_(2g) t x`,
/// * every coefficient `c` of the map's denominator becomes `c + e t`,
/// * every nonzero non-leading coefficient `c` of the `f2` numerator becomes `c + h t`,
///
/// with target `y^2 = x(x+1)(x+t)`. Unknowns can be pinned to fixed values,
/// which removes them from the system.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationAnsatz {
    pub degenerate: DegenerateCover,
    pub unknowns: Vec<Unknown>,
    pub pinned: BTreeMap<usize, Rational>,
}

fn unknown_name(i: usize, total: usize) -> String {
    if total <= 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("u{}", i + 1)
    }
}

impl DeformationAnsatz {
    pub fn standard(g: i64) -> Result<Self> {
        let degenerate = degenerate_cover(g)?;
        let genus = degenerate.genus;
        let mut slots: Vec<Slot> = (1..=2 * genus).rev().map(Slot::Curve).collect();
        slots.extend((0..degenerate.denominator.coeffs().len()).rev().map(Slot::Denominator));
        let b = &degenerate.f2_numerator;
        let top = b.degree().unwrap_or(0);
        slots.extend(
            (0..top)
                .rev()
                .filter(|&e| !b.coeff(e).is_zero())
                .map(Slot::F2Numerator),
        );
        let total = slots.len();
        let unknowns = slots
            .into_iter()
            .enumerate()
            .map(|(i, slot)| Unknown { name: unknown_name(i, total), slot })
            .collect();
        Ok(DeformationAnsatz { degenerate, unknowns, pinned: BTreeMap::new() })
    }

    pub fn genus(&self) -> usize {
        self.degenerate.genus
    }

    /// Fixes unknown `index` to `value`.
    pub fn pin(mut self, index: usize, value: Rational) -> Self {
        self.pinned.insert(index, value);
        self
    }

    /// Indices of the unknowns that are system columns, in column order.
    pub fn free_unknowns(&self) -> Vec<usize> {
        (0..self.unknowns.len()).filter(|i| !self.pinned.contains_key(i)).collect()
    }

    fn perturbed(&self, base: &QPoly, pick: impl Fn(Slot) -> Option<usize>) -> Poly<FirstOrder> {
        let mut coeffs: Vec<FirstOrder> =
            base.coeffs().iter().map(|c| FirstOrder::scalar(c.clone())).collect();
        for (i, u) in self.unknowns.iter().enumerate() {
            let Some(e) = pick(u.slot) else { continue };
            if coeffs.len() <= e {
                coeffs.resize(e + 1, FirstOrder::zero());
            }
            let b = coeffs[e].base.clone();
            coeffs[e] = match self.pinned.get(&i) {
                Some(v) => FirstOrder::affine(b, v.clone()),
                None => FirstOrder::with_unknown(b, i),
            };
        }
        Poly::new(coeffs, Var::X)
    }

    /// The order-t equations, one per power of x, in the free unknowns.
    pub fn assemble(&self) -> Result<LinearSystem> {
        let dc = &self.degenerate;
        let source = self.perturbed(&degenerate_source_rhs(dc.genus), |s| match s {
            Slot::Curve(e) => Some(e),
            _ => None,
        });
        let den = self.perturbed(&dc.denominator, |s| match s {
            Slot::Denominator(e) => Some(e),
            _ => None,
        });
        let b = self.perturbed(&dc.f2_numerator, |s| match s {
            Slot::F2Numerator(e) => Some(e),
            _ => None,
        });
        let a = dc.numerator.map_coeffs(|c| FirstOrder::scalar(c.clone()));
        let target = truncate_to_order_t(HyperellipticCurve::legendre().rhs());
        if target.degree() != Some(3) {
            return Err(Error::Pipeline("the ansatz needs a cubic target".into()));
        }

        // b^2 p = d^6 q(a/d^2) = sum_i q_i a^i d^(6-2i)
        let lhs = b.pow(2) * source;
        let mut rhs = Poly::zero_in(Var::X);
        for (i, qi) in target.coeffs().iter().enumerate() {
            let term = a.pow(i as u32) * den.pow(6 - 2 * i as u32);
            rhs = rhs + term.scale(qi);
        }
        let identity = lhs - rhs;

        let columns = self.free_unknowns();
        let position: BTreeMap<usize, usize> = columns.iter().enumerate().map(|(c, &u)| (u, c)).collect();
        let mut system = LinearSystem::new(columns.len());
        for (e, c) in identity.coeffs().iter().enumerate() {
            if !c.base.is_zero() {
                return Err(Error::Pipeline(format!("order-zero coefficient of x^{e} does not vanish")));
            }
            let mut row = vec![Rational::zero(); columns.len()];
            for (u, v) in &c.terms {
                row[position[u]] = v.clone();
            }
            system.push_row(row, -&c.constant);
        }
        Ok(system)
    }
}

fn truncate_to_order_t(p: &TxPoly) -> Poly<FirstOrder> {
    p.map_coeffs(|c| FirstOrder::affine(c.coeff(0), c.coeff(1)))
}

/// The linear system of the standard ansatz for genus `g`.
pub fn assemble_deformation_system(g: i64) -> Result<LinearSystem> {
    DeformationAnsatz::standard(g)?.assemble()
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeformationReport {
    pub genus: usize,
    pub unknowns: Vec<Unknown>,
    pub rows: usize,
    pub cols: usize,
    /// Value of every unknown, pinned ones included.
    pub values: Vec<Rational>,
    pub nullity: usize,
    /// The candidate cover satisfies the identity exactly in `t`.
    pub exact: bool,
}

impl DeformationReport {
    pub fn value_of(&self, name: &str) -> Option<&Rational> {
        self.unknowns.iter().position(|u| u.name == name).map(|i| &self.values[i])
    }

    /// Solved values of the curve unknowns, from the `x^(2g)` slot down.
    pub fn curve_values(&self) -> Vec<Rational> {
        self.unknowns
            .iter()
            .zip(&self.values)
            .filter(|(u, _)| !u.slot.is_map())
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn map_perturbation_is_zero(&self) -> bool {
        self.unknowns
            .iter()
            .zip(&self.values)
            .all(|(u, v)| !u.slot.is_map() || v.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Deformation {
    pub family: FamilyInstance,
    pub report: DeformationReport,
}

pub fn deform(g: i64) -> Result<Deformation> {
    deform_with(&DeformationAnsatz::standard(g)?)
}

/// Solves the ansatz, builds `C_t` from the solved curve coefficients and the
/// unperturbed map, and certifies the cover identity exactly in `t`.
pub fn deform_with(ansatz: &DeformationAnsatz) -> Result<Deformation> {
    let system = ansatz.assemble()?;
    let SolveOutcome::Solved(solution) = system.solve() else {
        return Err(Error::DeformationFailed("the order-t system is inconsistent".into()));
    };
    let mut values = vec![Rational::zero(); ansatz.unknowns.len()];
    for (&i, v) in &ansatz.pinned {
        values[i] = v.clone();
    }
    for (col, &i) in ansatz.free_unknowns().iter().enumerate() {
        values[i] = solution.values[col].clone();
    }

    let dc = &ansatz.degenerate;
    let genus = dc.genus;
    let mut coeffs: Vec<QPoly> = degenerate_source_rhs(genus)
        .coeffs()
        .iter()
        .map(|c| QPoly::constant(c.clone()))
        .collect();
    for (u, v) in ansatz.unknowns.iter().zip(&values) {
        if let Slot::Curve(e) = u.slot {
            let t_term = QPoly::monomial(v.clone(), 1, Var::T);
            coeffs[e] = &coeffs[e] + &t_term;
        }
    }
    let cover = Cover {
        source: HyperellipticCurve::new(TxPoly::new(coeffs, Var::X))?,
        target: HyperellipticCurve::legendre(),
        map: dc.cover.map.clone(),
        degree: dc.cover.degree,
    };
    let exact = cover.verify_identity().holds;
    let report = DeformationReport {
        genus,
        unknowns: ansatz.unknowns.clone(),
        rows: system.rows(),
        cols: system.cols(),
        values,
        nullity: solution.nullity,
        exact,
    };
    if !exact {
        let detail = if report.map_perturbation_is_zero() {
            "solved curve coefficients do not satisfy the identity beyond order t".to_string()
        } else {
            "the solution needs a perturbed map, but the candidate keeps the degenerate map".to_string()
        };
        return Err(Error::FirstOrderOnly(detail));
    }
    let k = dc
        .f2_numerator
        .exact_div(&QPoly::monomial(Rational::one(), genus - 1, Var::X))
        .map_err(|_| Error::Pipeline("f2 numerator is not divisible by x^(g-1)".into()))?;
    let family = FamilyInstance { genus, j: dc.denominator.clone(), k, cover };
    Ok(Deformation { family, report })
}
