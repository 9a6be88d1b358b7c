use ecover_core::exact::{parse_ratfunc, parse_tx_poly, rat, Ring};
use ecover_core::{build_family, staircase, OrigamiDiagram, Permutation, QPoly, RatFunc, TxPoly, Var};
use proptest::prelude::*;

fn qpoly() -> impl Strategy<Value = QPoly> {
    proptest::collection::vec(-9i64..=9, 0..6).prop_map(|c| QPoly::from_ints(&c, Var::X))
}

fn nonzero_qpoly() -> impl Strategy<Value = QPoly> {
    qpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (qpoly(), nonzero_qpoly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn tx_poly() -> impl Strategy<Value = TxPoly> {
    proptest::collection::vec(proptest::collection::vec(-5i64..=5, 0..3), 0..5).prop_map(|rows| {
        let coeffs = rows.iter().map(|r| QPoly::from_ints(r, Var::T)).collect();
        TxPoly::new(coeffs, Var::X)
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn diagram(n: usize) -> impl Strategy<Value = OrigamiDiagram> {
    (permutation(n), permutation(n)).prop_map(|(r, u)| OrigamiDiagram::new(r, u).unwrap())
}

/// Counts vertices by gluing the four corners of every square directly.
fn glued_corner_classes(d: &OrigamiDiagram) -> usize {
    // corner c of square i (0-based) is 4i + c: 0 bottom-left, 1 bottom-right, 2 top-left, 3 top-right
    let n = d.n();
    let mut parent: Vec<usize> = (0..4 * n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    };
    for i in 0..n {
        let r = d.right().apply(i + 1) - 1;
        let u = d.up().apply(i + 1) - 1;
        union(4 * i + 1, 4 * r);
        union(4 * i + 3, 4 * r + 2);
        union(4 * i + 2, 4 * u);
        union(4 * i + 3, 4 * u + 1);
    }
    (0..4 * n).filter(|&i| find(&mut parent, i) == i).count()
}

proptest! {
    #[test]
    fn ratfunc_canonical_form_is_idempotent(r in ratfunc()) {
        let again = RatFunc::new(r.num().clone(), r.den().clone()).unwrap();
        prop_assert_eq!(&again, &r);
        prop_assert!(r.den().is_integral());
        prop_assert!(r.den().leading().unwrap() > &rat(0));
        prop_assert!(r.num().gcd(r.den()).map(|g| g.degree() == Some(0)).unwrap_or(true));
    }

    #[test]
    fn polynomial_ring_axioms(a in qpoly(), b in qpoly(), c in qpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.sub(&a), RatFunc::zero_in(Var::X));
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
        }
    }

    #[test]
    fn leibniz_rule(a in ratfunc(), b in ratfunc()) {
        let lhs = a.mul(&b).derivative();
        let rhs = a.derivative().mul(&b).add(&a.mul(&b.derivative()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squarefree_ignores_multiplicity(a in nonzero_qpoly(), b in nonzero_qpoly()) {
        let lhs = (&(&a * &a) * &b).squarefree_part();
        let rhs = (&a * &b).squarefree_part();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tx_poly_print_parse_round_trip(p in tx_poly()) {
        let text = p.to_string();
        prop_assert_eq!(parse_tx_poly(&text).unwrap(), p, "{}", text);
    }

    #[test]
    fn ratfunc_print_parse_round_trip(r in ratfunc()) {
        let text = r.to_string();
        let back = parse_ratfunc(&text).unwrap();
        prop_assert_eq!(back.to_string(), text.clone());
        prop_assert_eq!(back, r, "{}", text);
    }

    #[test]
    fn relabeling_preserves_invariants((d, sigma) in (2usize..8).prop_flat_map(|n| (diagram(n), permutation(n)))) {
        let e = d.relabel(&sigma);
        prop_assert_eq!(e.monodromy_cycle_type(), d.monodromy_cycle_type());
        prop_assert_eq!(e.vertex_count(), d.vertex_count());
        prop_assert_eq!(e.is_connected(), d.is_connected());
        prop_assert_eq!(e.genus().ok(), d.genus().ok());
    }

    #[test]
    fn vertices_match_corner_gluing(d in (1usize..9).prop_flat_map(diagram)) {
        prop_assert_eq!(d.vertex_count(), glued_corner_classes(&d));
        if let Ok(g) = d.genus() {
            // Euler: V - E + F = V - 2n + n
            prop_assert_eq!(2 - 2 * g as i64, d.vertex_count() as i64 - d.n() as i64);
        }
    }

    #[test]
    fn origami_text_round_trip(d in (1usize..9).prop_flat_map(diagram)) {
        let text = d.to_string();
        prop_assert_eq!(text.parse::<OrigamiDiagram>().unwrap(), d);
    }
}

#[test]
fn staircase_corner_gluing() {
    for g in 1..=20 {
        let d = staircase(g).unwrap();
        assert_eq!(glued_corner_classes(&d), 1, "g = {g}");
    }
}

/// The same genus from four places: the staircase, the arithmetic genus of
/// the curve, its geometric genus at a smooth fibre, and Riemann-Hurwitz
/// from the ramification index.
#[test]
fn genus_agrees_across_modules() {
    for g in 1..=8i64 {
        let family = build_family(g).unwrap();
        let source = &family.cover.source;
        let from_origami = staircase(g).unwrap().genus().unwrap();
        let arithmetic = source.genus_arithmetic();
        let geometric = source.specialize_t(&rat(2)).curve.genus_geometric().unwrap();
        let e = family.cover.ramification_report().unwrap().ramification_index;
        let from_rh = (e - 1) / 2 + 1;
        assert_eq!([from_origami, arithmetic, geometric, from_rh], [g as usize; 4], "g = {g}");
    }
}
