//! One test per acceptance criterion. Each prints a single PASS/FAIL line;
//! run with `--nocapture` to see them. All checks are exact, so every
//! tolerance is zero and the bounds below are the only knobs.

use ecover_core::conformance::{self, CriterionOutcome};

/// Genus range of criteria 1, 2 and 8.
const MAX_GENUS: i64 = 12;

fn report(outcome: CriterionOutcome) {
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn criterion_1_cover_identity() {
    report(conformance::theorem_reproduction(MAX_GENUS));
}

#[test]
fn criterion_2_pullback_law() {
    report(conformance::pullback_law(MAX_GENUS));
}

#[test]
fn criterion_3_reference_curves() {
    report(conformance::reference_curves());
}

#[test]
fn criterion_4_degeneration_rederivation() {
    report(conformance::degeneration_rederivation());
}

#[test]
fn criterion_5_origami() {
    report(conformance::origami_conformance());
}

#[test]
fn criterion_6_degenerate_specializations() {
    report(conformance::degenerate_specializations());
}

#[test]
fn criterion_7_two_branch_maps() {
    report(conformance::two_branch_law());
}

#[test]
fn criterion_8_companion_identities() {
    report(conformance::oracle_checks(MAX_GENUS));
}
