//! The acceptance suite as library code, so that `cargo test` and the CLI's
//! `selftest` run the same checks.
//!
//! Each criterion collects every failure it sees instead of stopping at the
//! first, and reports them in `detail`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::degeneration::{deform, two_branch_map};
use crate::error::Result;
use crate::exact::{frac, parse_ratfunc, parse_tx_poly, rat, QPoly, RatFunc, Ring, Var};
use crate::family::{build_family, companion_identities, j_poly, k_poly};
use crate::origami::{staircase, OrigamiDiagram, Permutation};

/// Upper genus of the criteria stated for `g = 1..12`.
pub const DEFAULT_MAX_GENUS: i64 = 12;
pub const DEFORMATION_MAX_GENUS: i64 = 8;
pub const STAIRCASE_MAX_GENUS: i64 = 20;
pub const RELABELINGS_PER_SIZE: usize = 100;
pub const RELABELING_SIZES: [usize; 3] = [3, 5, 7];
pub const RELABELING_SEED: u64 = 0x5eed_0001;
pub const TWO_BRANCH_DEGREES: [i64; 5] = [1, 3, 5, 7, 9];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionOutcome {
    fn from_failures(id: u8, title: &'static str, checked: String, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let detail = if passed { checked } else { failures.join("; ") };
        CriterionOutcome { id, title, passed, detail }
    }

    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("[{verdict}] criterion {}: {} ({})", self.id, self.title, self.detail)
    }
}

fn describe<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn theorem_reproduction(max_genus: i64) -> CriterionOutcome {
    let mut failures = Vec::new();
    for g in 1..=max_genus {
        match describe(build_family(g)) {
            Ok(f) if f.cover.verify_identity().holds => {}
            Ok(f) => failures.push(format!("g={g}: difference {}", f.cover.verify_identity().difference)),
            Err(e) => failures.push(format!("g={g}: {e}")),
        }
    }
    CriterionOutcome::from_failures(1, "cover identity", format!("g=1..{max_genus} exact over Q(t)"), failures)
}

pub fn pullback_law(max_genus: i64) -> CriterionOutcome {
    let mut failures = Vec::new();
    for g in 1..=max_genus {
        let expected = RatFunc::from_poly(QPoly::monomial(rat(2 * g - 1), g as usize - 1, Var::X));
        match describe(build_family(g).and_then(|f| f.cover.pullback_invariant_differential())) {
            Ok(l) if l == expected => {}
            Ok(l) => failures.push(format!("g={g}: got {l}, expected {expected}")),
            Err(e) => failures.push(format!("g={g}: {e}")),
        }
    }
    CriterionOutcome::from_failures(2, "pullback law", format!("g=1..{max_genus} equals (2g-1)x^(g-1)"), failures)
}

const GENUS_TWO_CURVE: &str = "x^5+(1+9*t)*x^4+33*t*x^3+40*t*x^2+16*t*x";
const GENUS_THREE_CURVE: &str = "x^7+(1+25*t)*x^6+225*t*x^5+760*t*x^4+1200*t*x^3+896*t*x^2+256*t*x";

pub fn reference_curves() -> CriterionOutcome {
    let mut failures = Vec::new();
    for (g, text) in [(2, GENUS_TWO_CURVE), (3, GENUS_THREE_CURVE)] {
        let expected = parse_tx_poly(text).expect("literal parses");
        match describe(build_family(g)) {
            Ok(f) if f.cover.source.rhs() == &expected => {}
            Ok(f) => failures.push(format!("g={g}: got {}", f.cover.source.rhs())),
            Err(e) => failures.push(format!("g={g}: {e}")),
        }
    }
    CriterionOutcome::from_failures(3, "reference curves", "g=2 and g=3 coefficient-exact".into(), failures)
}

pub fn degeneration_rederivation() -> CriterionOutcome {
    let mut failures = Vec::new();
    let expected: Vec<(&str, i64)> =
        vec![("a", 9), ("b", 33), ("c", 40), ("d", 16), ("e", 0), ("f", 0), ("g", 0)];
    match describe(deform(2)) {
        Ok(d) => {
            for (name, v) in expected {
                if d.report.value_of(name) != Some(&rat(v)) {
                    failures.push(format!("g=2: {name} = {:?}, expected {v}", d.report.value_of(name)));
                }
            }
        }
        Err(e) => failures.push(format!("g=2: {e}")),
    }
    for g in 2..=DEFORMATION_MAX_GENUS {
        match (describe(deform(g)), describe(build_family(g))) {
            (Ok(d), Ok(f)) => {
                if !d.report.exact {
                    failures.push(format!("g={g}: exactness certificate failed"));
                }
                if d.family != f {
                    failures.push(format!("g={g}: deformed family differs from the explicit one"));
                }
            }
            (Err(e), _) | (_, Err(e)) => failures.push(format!("g={g}: {e}")),
        }
    }
    CriterionOutcome::from_failures(
        4,
        "degeneration re-derivation",
        format!("g=2 values a..g, g=2..{DEFORMATION_MAX_GENUS} exact and equal"),
        failures,
    )
}

fn diagram_invariants(d: &OrigamiDiagram) -> (Vec<usize>, usize, bool, Option<usize>) {
    (d.monodromy_cycle_type(), d.vertex_count(), d.is_connected(), d.genus().ok())
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).expect("a shuffle is a permutation")
}

pub fn origami_conformance() -> CriterionOutcome {
    let mut failures = Vec::new();

    let example = OrigamiDiagram::new(
        Permutation::from_cycles(3, &[vec![2, 3]]).expect("valid"),
        Permutation::from_cycles(3, &[vec![1, 2]]).expect("valid"),
    )
    .expect("valid");
    let expected = Permutation::from_cycles(3, &[vec![1, 3, 2]]).expect("valid");
    if example.commutator() != expected {
        failures.push(format!("commutator((2 3),(1 2)) = {}", example.commutator()));
    }
    if example.vertex_count() != 1 || example.genus().ok() != Some(2) {
        failures.push(format!("example: {} vertices, genus {:?}", example.vertex_count(), example.genus()));
    }

    for g in 1..=STAIRCASE_MAX_GENUS {
        match describe(staircase(g)) {
            Ok(d) => {
                let want = (vec![2 * g as usize - 1], 1, true, Some(g as usize));
                let got = diagram_invariants(&d);
                if got != want {
                    failures.push(format!("staircase({g}): {got:?}"));
                }
            }
            Err(e) => failures.push(format!("staircase({g}): {e}")),
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(RELABELING_SEED);
    for n in RELABELING_SIZES {
        let base = staircase((n as i64 + 1) / 2).expect("n is odd");
        for trial in 0..RELABELINGS_PER_SIZE {
            // alternate between the staircase and an arbitrary pair
            let d = if trial % 2 == 0 {
                base.clone()
            } else {
                OrigamiDiagram::new(random_permutation(n, &mut rng), random_permutation(n, &mut rng))
                    .expect("equal sizes")
            };
            let sigma = random_permutation(n, &mut rng);
            let relabeled = d.relabel(&sigma);
            if diagram_invariants(&relabeled) != diagram_invariants(&d) {
                failures.push(format!("n={n}: relabeling {sigma} changed the invariants of {d}"));
            }
        }
    }

    CriterionOutcome::from_failures(
        5,
        "origami conformance",
        format!(
            "example, staircase g=1..{STAIRCASE_MAX_GENUS}, {RELABELINGS_PER_SIZE} relabelings per n in {RELABELING_SIZES:?}"
        ),
        failures,
    )
}

/// Checked literally: `x^(2g)(x+1)` at `t = 0`, and geometric genus 0 at
/// both `t = 0` and `t = -1`.
pub fn degenerate_specializations() -> CriterionOutcome {
    let mut failures = Vec::new();
    for g in 2..=DEFORMATION_MAX_GENUS {
        let source = match describe(build_family(g)) {
            Ok(f) => f.cover.source,
            Err(e) => {
                failures.push(format!("g={g}: {e}"));
                continue;
            }
        };
        let expected = QPoly::monomial(rat(1), 2 * g as usize, Var::X) * QPoly::from_ints(&[1, 1], Var::X);
        let at_zero = source.specialize_t(&rat(0)).curve;
        if at_zero.rhs_over_q() != Some(expected) {
            failures.push(format!("g={g}: C_0 = {}", at_zero.rhs()));
        }
        for t in [0, -1] {
            match describe(source.specialize_t(&rat(t)).curve.genus_geometric()) {
                Ok(0) => {}
                Ok(genus) => failures.push(format!("g={g}: t={t} has geometric genus {genus}")),
                Err(e) => failures.push(format!("g={g}: t={t}: {e}")),
            }
        }
    }
    CriterionOutcome::from_failures(
        6,
        "degenerate specializations",
        format!("g=2..{DEFORMATION_MAX_GENUS} at t=0 and t=-1"),
        failures,
    )
}

pub fn two_branch_law() -> CriterionOutcome {
    let mut failures = Vec::new();
    let expected = parse_ratfunc("(x^3+3*x)/(3*x^2+1)").expect("literal parses").with_var(Var::Z);
    match describe(two_branch_map(3)) {
        Ok(m) if m == expected => {}
        Ok(m) => failures.push(format!("n=3: got {m}")),
        Err(e) => failures.push(format!("n=3: {e}")),
    }
    let z_sq_minus_1 = QPoly::from_ints(&[-1, 0, 1], Var::Z);
    for n in TWO_BRANCH_DEGREES {
        let m = match describe(two_branch_map(n)) {
            Ok(m) => m,
            Err(e) => {
                failures.push(format!("n={n}: {e}"));
                continue;
            }
        };
        for p in [rat(1), rat(-1)] {
            if m.eval(&p).ok() != Some(p.clone()) {
                failures.push(format!("n={n}: does not fix {p}"));
            }
        }
        let num = m.derivative().num().clone();
        if num.monic() != z_sq_minus_1.pow(n as u32 - 1).monic() {
            failures.push(format!("n={n}: derivative numerator {num}"));
        }
    }
    CriterionOutcome::from_failures(
        7,
        "two-branch maps",
        format!("n=3 closed form, n in {TWO_BRANCH_DEGREES:?} fix +-1 and branch only there"),
        failures,
    )
}

/// `a + b u` in ℚ[x][u] / (u^2 - x - 1).
#[derive(Clone)]
struct QuadraticElement {
    a: QPoly,
    b: QPoly,
}

impl QuadraticElement {
    fn times(&self, other: &Self) -> Self {
        let u_sq = QPoly::from_ints(&[1, 1], Var::X);
        QuadraticElement {
            a: &self.a * &other.a + &(&self.b * &other.b) * &u_sq,
            b: &self.a * &other.b + &self.b * &other.a,
        }
    }

    fn power(&self, n: u32) -> Self {
        let mut acc = QuadraticElement { a: QPoly::one(), b: QPoly::zero_in(Var::X) };
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }
}

/// `((1+u)^n + (1-u)^n)/2` and `((1+u)^n - (1-u)^n)/(2u)` expanded by
/// repeated multiplication, independent of any binomial table.
fn oracle_j_k(g: i64) -> (QPoly, QPoly) {
    let n = 2 * g as u32 - 1;
    let plus = QuadraticElement { a: QPoly::one(), b: QPoly::one() }.power(n);
    let minus = QuadraticElement { a: QPoly::one(), b: -QPoly::one() }.power(n);
    let half = frac(1, 2);
    ((plus.a + minus.a).scale(&half), (plus.b - minus.b).scale(&half))
}

pub fn oracle_checks(max_genus: i64) -> CriterionOutcome {
    let mut failures = Vec::new();
    let x = QPoly::variable(Var::X);
    for g in 1..=max_genus {
        let (j, k) = oracle_j_k(g);
        let n = 2 * g - 1;
        if j_poly(g).ok().as_ref() != Some(&j) || k_poly(g).ok().as_ref() != Some(&k) {
            failures.push(format!("g={g}: j, k disagree with the oracle"));
        }
        let norm = &x + &QPoly::one();
        if norm * k.pow(2) != j.pow(2) + x.pow(n as u32) {
            failures.push(format!("g={g}: norm identity fails on the oracle"));
        }
        let nn = QPoly::constant(rat(n));
        if &j * &nn - (&x * j.derivative()).scale(&rat(2)) != &k * &nn {
            failures.push(format!("g={g}: derivative identity fails on the oracle"));
        }
        match describe(companion_identities(g)) {
            Ok(c) if c.holds() => {}
            Ok(c) => failures.push(format!("g={g}: companion certificate {c:?}")),
            Err(e) => failures.push(format!("g={g}: {e}")),
        }
    }
    CriterionOutcome::from_failures(8, "companion identities", format!("g=1..{max_genus} against the u-oracle"), failures)
}

/// All eight criteria. `max_genus` bounds criteria 1, 2 and 8.
pub fn run_all(max_genus: i64) -> Vec<CriterionOutcome> {
    vec![
        theorem_reproduction(max_genus),
        pullback_law(max_genus),
        reference_curves(),
        degeneration_rederivation(),
        origami_conformance(),
        degenerate_specializations(),
        two_branch_law(),
        oracle_checks(max_genus),
    ]
}
