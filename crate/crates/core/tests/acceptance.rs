//! Acceptance suite: one test per acceptance criterion, each printing a
//! pass/fail line (run with `cargo test --test acceptance -- --nocapture`
//! to see them). All comparisons are exact polynomial identities; the
//! stated runtime budgets are asserted as wall-clock bounds.

use std::time::{Duration, Instant};

use sjord_core::classical::{
    classical_automorphism_check, classical_relations_suite, fundamental_generators, Rep,
};
use sjord_core::hopf::hopf_axiom_suite;
use sjord_core::jordanian::{
    automorphism_phi_check, commutator_table, deformed_relations_suite,
    deformed_representation, specialization_crosscheck,
};
use sjord_core::report::{CheckReport, Status};
use sjord_core::rmatrix::{contraction_suite, rmatrix_suite};

fn finish(criterion: &str, ok: bool, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    let within = elapsed <= budget;
    println!(
        "acceptance {criterion}: {} ({elapsed:.2?}, budget {budget:?})",
        if ok && within { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed");
    assert!(
        within,
        "criterion {criterion} exceeded its runtime budget: {elapsed:?} > {budget:?}"
    );
}

fn assert_suite_clean(report: &CheckReport) -> bool {
    let ok = report.passed();
    if !ok {
        for c in report.failures() {
            eprintln!(
                "  [fail] {}:{} {} {:?} {:?}",
                report.suite, report.rep, c.id, c.variant, c.witness
            );
        }
    }
    ok
}

/// Criterion 1: the contraction pipeline reproduces the stated 9x9
/// h-matrix exactly, all 81 entries, h symbolic.
#[test]
fn criterion_1_contraction_reproduction() {
    let t0 = Instant::now();
    let report = contraction_suite().unwrap();
    let mut ok = assert_suite_clean(&report);
    let entry_checks = report
        .checks
        .iter()
        .filter(|c| c.id.starts_with("contract:(") && c.status == Status::Pass)
        .count();
    ok &= entry_checks == 81;
    finish("1 (contraction reproduction)", ok, t0, Duration::from_secs(1));
}

/// Criterion 2: classical relations and the classical automorphism pass
/// for N = 2, 3, 4 in the fundamental; tensor-square bracket preservation
/// for N = 2, 3.
#[test]
fn criterion_2_classical_suites() {
    let t0 = Instant::now();
    let mut ok = true;
    for n in [2u8, 3, 4] {
        let fund = fundamental_generators(n).unwrap();
        ok &= assert_suite_clean(&classical_relations_suite(&fund, Rep::Fund).unwrap());
        if n <= 3 {
            ok &= assert_suite_clean(&classical_relations_suite(&fund, Rep::Fund2).unwrap());
            ok &= assert_suite_clean(&classical_automorphism_check(&fund, Rep::Fund, true).unwrap());
        }
    }
    finish("2 (classical suites)", ok, t0, Duration::from_secs(60));
}

/// Criterion 3: every stated deformed relation holds exactly in fund and
/// fund2 under the documented typo-variant policy, with zero plain
/// failures and annotated variant-passes.
#[test]
fn criterion_3_deformed_relation_lists() {
    let t0 = Instant::now();
    let mut ok = true;
    let mut seen_alias = false;
    let mut seen_coeff_variant = false;
    for n in [2u8, 3] {
        for rep in [Rep::Fund, Rep::Fund2] {
            let dt = deformed_representation(n, rep).unwrap();
            let report = deformed_relations_suite(&dt, true);
            ok &= assert_suite_clean(&report);
            for c in report.variant_passes() {
                ok &= c.variant.is_some();
                let note = c.variant.as_deref().unwrap_or("");
                seen_alias |= note.contains("alias F_");
                seen_coeff_variant |= note.contains("h/2") && note.contains("h/4");
            }
        }
        ok &= assert_suite_clean(&specialization_crosscheck(n).unwrap());
        let dt = deformed_representation(n, Rep::Fund).unwrap();
        ok &= assert_suite_clean(&automorphism_phi_check(&dt, true).unwrap());
    }
    ok &= seen_alias && seen_coeff_variant;
    finish("3 (deformed relation lists)", ok, t0, Duration::from_secs(30));
}

/// Criterion 4: Hopf axioms (homomorphism, coassociativity, counit,
/// antipode) for N = 2, 3; derived antipodes match the stated rank-2
/// images.
#[test]
fn criterion_4_hopf_axioms() {
    let t0 = Instant::now();
    let mut ok = true;
    for n in [2u8, 3] {
        let dt = deformed_representation(n, Rep::Fund).unwrap();
        let report = hopf_axiom_suite(&dt, true).unwrap();
        ok &= assert_suite_clean(&report);
        let has = |prefix: &str| report.checks.iter().any(|c| c.id.starts_with(prefix));
        ok &= has("hom:") && has("coassoc:") && has("counit-left:") && has("antipode-left:");
        if n == 2 {
            let derived = report
                .checks
                .iter()
                .filter(|c| c.id.starts_with("S-derived:"))
                .count();
            ok &= derived == 8;
        }
    }
    finish("4 (hopf axioms)", ok, t0, Duration::from_secs(60));
}

/// Criterion 5: Yang-Baxter for the standard and contracted R-matrices,
/// the closed form and dressing identity for the universal element, and
/// the RLL identity (N = 2 stated form; N = 3 with the recorded diagonal
/// variant).
#[test]
fn criterion_5_rmatrix_suite() {
    let t0 = Instant::now();
    let mut ok = true;
    let r2 = rmatrix_suite(2, true).unwrap();
    ok &= assert_suite_clean(&r2);
    let status_of = |report: &CheckReport, id: &str| {
        report
            .checks
            .iter()
            .find(|c| c.id == id)
            .map(|c| c.status)
    };
    ok &= status_of(&r2, "qybe:Rq").is_some_and(|s| s != Status::Fail);
    ok &= status_of(&r2, "qybe:Rh-contracted") == Some(Status::Pass);
    ok &= status_of(&r2, "universal:closed-form") == Some(Status::Pass);
    ok &= status_of(&r2, "universal:dressed-equals-contracted") == Some(Status::Pass);
    ok &= status_of(&r2, "frt:rll") == Some(Status::Pass);

    let r3 = rmatrix_suite(3, true).unwrap();
    ok &= assert_suite_clean(&r3);
    ok &= status_of(&r3, "frt:rll:any-variant") == Some(Status::Pass);
    let recorded = r3
        .checks
        .iter()
        .filter(|c| c.id.starts_with("frt:rll:diag-"))
        .all(|c| c.status != Status::Fail);
    ok &= recorded;
    finish("5 (rmatrix suite)", ok, t0, Duration::from_secs(60));
}

/// Criterion 6: at h = 0 every deformed generator, coproduct, and
/// R-matrix reproduces its classical counterpart, for N = 2..5.
#[test]
fn criterion_6_classical_limits() {
    let t0 = Instant::now();
    let mut ok = true;
    for n in 2..=5u8 {
        let dt = deformed_representation(n, Rep::Fund).unwrap();
        let deformed = deformed_relations_suite(&dt, true);
        ok &= deformed
            .checks
            .iter()
            .filter(|c| c.id.starts_with("h0:"))
            .all(|c| c.status == Status::Pass);
        let hopf = hopf_axiom_suite(&dt, true).unwrap();
        ok &= hopf
            .checks
            .iter()
            .filter(|c| c.id.starts_with("h0-"))
            .all(|c| c.status == Status::Pass);
        let rm = rmatrix_suite(n, true).unwrap();
        ok &= rm
            .checks
            .iter()
            .filter(|c| c.id.starts_with("h0:"))
            .all(|c| c.status == Status::Pass);
    }
    finish("6 (classical limits)", ok, t0, Duration::from_secs(120));
}

/// Criterion 7: the general-rank map and coproducts construct for
/// N = 4, 5; the embedded sl(2) sector, unipotent invariants and counit
/// axiom pass; the commutator-table artifact is emitted.
#[test]
fn criterion_7_general_rank_smoke() {
    let t0 = Instant::now();
    let mut ok = true;
    for n in [4u8, 5] {
        for rep in [Rep::Fund, Rep::Fund2] {
            let dt = deformed_representation(n, rep).unwrap();
            ok &= assert_suite_clean(&deformed_relations_suite(&dt, true));
        }
        let dt = deformed_representation(n, Rep::Fund).unwrap();
        let hopf = hopf_axiom_suite(&dt, true).unwrap();
        ok &= assert_suite_clean(&hopf);
        ok &= hopf.checks.iter().any(|c| c.id.starts_with("counit-left:"));

        let table = commutator_table(&dt).unwrap();
        ok &= !table.pairs.is_empty();
        let json = serde_json::to_string(&table).unwrap();
        ok &= json.contains("\"pairs\"");
    }
    finish("7 (general-rank smoke)", ok, t0, Duration::from_secs(300));
}
