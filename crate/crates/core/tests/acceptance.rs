//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with the worst residual. Run with
//! `cargo test -p hgc-core --test acceptance -- --nocapture` to see the lines.

use hgc_core::suites::{self, SuiteReport};

fn run(criterion: &str, report: SuiteReport) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "{status} criterion {criterion}: {} checks, max residual {:.3e}",
        report.checks.len(),
        report.max_residual()
    );
    for note in &report.notes {
        println!("    note: {note}");
    }
    if !report.passed() {
        for c in report.checks.iter().filter(|c| !c.pass) {
            println!(
                "    FAIL {}: residual {:.6e} > tol {:.1e}",
                c.name, c.residual, c.tol
            );
        }
    }
    assert!(report.passed(), "criterion {criterion} failed");
}

const SEED: u64 = 7;

#[test]
fn criterion_01_lie_algebra() {
    run("1 (Lie algebra)", suites::lie_suite(SEED));
}

#[test]
fn criterion_02_symmetries() {
    run("2 (discrete symmetries)", suites::symmetry_suite(SEED));
}

#[test]
fn criterion_03_factorization() {
    run(
        "3 (factorization/transmutation)",
        suites::factorization_suite(SEED),
    );
}

#[test]
fn criterion_04_series_consistency() {
    run("4 (series consistency)", suites::series_suite(SEED));
}

#[test]
fn criterion_05_recurrences() {
    run("5 (recurrences)", suites::recurrence_suite(SEED));
}

#[test]
fn criterion_06_integral_representations() {
    run("6 (integral representations)", suites::integral_suite(SEED));
}

#[test]
fn criterion_07_f20_asymptotics() {
    run("7 (2F0 asymptotics/continuation)", suites::f20_suite(SEED));
}

#[test]
fn criterion_08_polynomials() {
    run("8 (polynomial families)", suites::polynomial_suite(SEED));
}

#[test]
fn criterion_09_degenerate() {
    run("9 (degenerate case)", suites::degenerate_suite(SEED));
}

#[test]
fn criterion_10_chebyshev() {
    run("10 (Chebyshev ladder)", suites::chebyshev_suite(SEED));
}

#[test]
fn criterion_11_classification() {
    run("11 (classification)", suites::classification_suite(SEED));
}

#[test]
fn annihilation_property_holds() {
    run(
        "series annihilation property",
        suites::annihilation_property(SEED),
    );
}
