//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `--nocapture`). Everything is exact — no tolerances.

use tropgreen::bundles::{bundle_6_1, bundle_6_2, bundle_6_3, bundle_7_gm, BundleReport};
use tropgreen::figure::{figure_data, Space};
use tropgreen::fixtures;
use tropgreen::fuzz::run_suite;
use tropgreen::scalar::TropScalar;

fn assert_criterion(number: u32, name: &str, pass: bool, detail: String) {
    println!(
        "criterion {number:02} ({name}): {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number:02} ({name}) failed: {detail}");
}

fn bundle_summary(r: &BundleReport) -> String {
    let passed = r.lines.iter().filter(|l| l.pass).count();
    format!("{passed}/{} claims verified", r.lines.len())
}

#[test]
fn criterion_01_example_6_1_bundle() {
    let r = bundle_6_1().expect("bundle runs");
    let embedding_note = r.findings.iter().any(|f| f.contains("no linear embedding"));
    assert_criterion(
        1,
        "example 6.1 bundle",
        r.pass() && embedding_note,
        format!("{}; embedding impossibility reported", bundle_summary(&r)),
    );
}

#[test]
fn criterion_02_example_6_2_bundle() {
    let r = bundle_6_2().expect("bundle runs");
    let non_invariance_note = r
        .findings
        .iter()
        .any(|f| f.contains("not a J-class invariant"));
    assert_criterion(
        2,
        "example 6.2 bundle",
        r.pass() && non_invariance_note,
        format!(
            "{}; column-rank non-invariance recorded",
            bundle_summary(&r)
        ),
    );
}

#[test]
fn criterion_03_example_6_3_bundle() {
    let r = bundle_6_3().expect("bundle runs");
    let verdict_recorded = r.findings.iter().any(|f| f.contains("decider verdict"));
    assert_criterion(
        3,
        "example 6.3 bundle",
        r.pass() && verdict_recorded,
        format!(
            "{}; transpose-comparison verdict recorded without hard-coding",
            bundle_summary(&r)
        ),
    );
}

#[test]
fn criterion_04_gm_example_bundle() {
    let r = bundle_7_gm().expect("bundle runs");
    assert_criterion(
        4,
        "Gondran-Minoux 2x2 example",
        r.pass(),
        bundle_summary(&r),
    );
}

#[test]
fn criterion_05_finitize_suite() {
    let r = run_suite("finitize", 100, 41).expect("suite runs");
    assert_criterion(
        5,
        "witness finitization, 100 fuzzed each direction",
        r.pass(),
        format!("{} checks, {} violations", r.checks, r.violations.len()),
    );
}

#[test]
fn criterion_06_duality_suite() {
    let r = run_suite("duality", 200, 42).expect("suite runs");
    assert_criterion(
        6,
        "duality maps on 200 random finitary matrices",
        r.pass(),
        format!("{} checks, {} violations", r.checks, r.violations.len()),
    );
}

#[test]
fn criterion_07_metric_suite() {
    let r = run_suite("metric-duality", 500, 43).expect("suite runs");
    assert_criterion(
        7,
        "metric properties on 500 random inputs",
        r.pass(),
        format!("{} checks, {} violations", r.checks, r.violations.len()),
    );
}

#[test]
fn criterion_08_rank_product_suite() {
    let r = run_suite("rank-product", 200, 44).expect("suite runs");
    assert_criterion(
        8,
        "rank-product inequality, 200 pairs per rank",
        r.pass(),
        format!("{} checks, {} violations", r.checks, r.violations.len()),
    );
}

#[test]
fn criterion_09_greens_consistency_suite() {
    let r = run_suite("greens-consistency", 200, 45).expect("suite runs");
    assert_criterion(
        9,
        "Green's order consistency, 200 products + 10 mutually-J pairs",
        r.pass(),
        format!("{} checks, {} violations", r.checks, r.violations.len()),
    );
}

#[test]
fn criterion_10_map_extends_oracle_suite() {
    let r = run_suite("map-extends-oracle", 100, 46).expect("suite runs");
    assert_criterion(
        10,
        "extension checker vs sampling oracle, 100 maps x 1000 pairs",
        r.pass(),
        format!("{} checks, {} violations", r.checks, r.violations.len()),
    );
}

#[test]
fn criterion_11_figure_export_vertices() {
    fn plot_pairs(m: &tropgreen::TropMatrix, space: Space) -> Vec<(i64, i64)> {
        let data = figure_data(m, space, 40, 11, None).expect("figure computes");
        let mut out: Vec<(i64, i64)> = data
            .plot_vertices
            .iter()
            .map(|(x, y)| {
                let to_int = |s: &TropScalar| {
                    i64::try_from(s.as_rational().expect("finite").to_integer()).expect("small")
                };
                (to_int(x), to_int(y))
            })
            .collect();
        out.sort();
        out
    }
    let pc_a61 = plot_pairs(&fixtures::a61(), Space::Cols);
    let pc_b61 = plot_pairs(&fixtures::b61(), Space::Cols);
    let pr_a63 = plot_pairs(&fixtures::a63(), Space::Rows);
    let pass = pc_a61 == vec![(0, 0), (1, -1), (2, -2), (3, -3)]
        && pc_b61 == vec![(0, 0), (1, -2), (3, -3)]
        && pr_a63 == vec![(0, 0), (1, 5), (3, 2)];
    assert_criterion(
        11,
        "figure vertex sets match the printed labels",
        pass,
        format!("PC(A61) {pc_a61:?}, PC(B61) {pc_b61:?}, PR(A63) {pr_a63:?}"),
    );
}
