//! End-to-end CLI tests: file parsing, exit codes, witness files, figure
//! export, and the JSON report mode.

use std::path::{Path, PathBuf};

use tropgreen::cli::{self, EXIT_ERROR, EXIT_FAILS, EXIT_HOLDS, EXIT_UNKNOWN, EXIT_USAGE};
use tropgreen::io::{parse_matrix, serialize_matrix};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["tropgreen".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = String::new();
    let code = cli::run(&argv, &mut out);
    (code, out)
}

#[test]
fn greens_exit_codes_follow_the_contract() {
    // holds = 0
    let (code, out) = run_cli(&["greens", "leqJ", &fixture("a61.json"), &fixture("b61.json")]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    assert!(out.contains("outcome: holds"));
    assert!(out.contains("witness"));

    // fails = 1 with an obstruction
    let (code, out) = run_cli(&["greens", "relD", &fixture("a61.json"), &fixture("b61.json")]);
    assert_eq!(code, EXIT_FAILS, "{out}");
    assert!(out.contains("generator dimensions differ"));

    // reflexive H holds
    let (code, out) = run_cli(&["greens", "relH", &fixture("a63.json"), &fixture("a63.json")]);
    assert_eq!(code, EXIT_HOLDS, "{out}");

    // usage error = 3
    let (code, _) = run_cli(&[
        "greens",
        "nonsense",
        &fixture("a61.json"),
        &fixture("b61.json"),
    ]);
    assert_eq!(code, EXIT_USAGE);

    // IO error = 4
    let (code, _) = run_cli(&["greens", "leqL", "/no/such/file.json", &fixture("b61.json")]);
    assert_eq!(code, EXIT_ERROR);
}

#[test]
fn greens_unknown_exit_code() {
    // a pair where both obstructions and searches come up empty: compare a
    // genuinely unrelated pair whose ranks agree
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| -> PathBuf {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    };
    // two 2x2 T-matrices with equal rank batteries but no sandwich found
    let a = write(
        "a.json",
        r#"{"semiring": "T", "rows": [["0", "-inf"], ["-inf", "0"]]}"#,
    );
    let b = write(
        "b.json",
        r#"{"semiring": "T", "rows": [["0", "1"], ["1", "0"]]}"#,
    );
    let (code, out) = run_cli(&[
        "greens",
        "leqJ",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--budget",
        "20",
    ]);
    assert!(
        code == EXIT_UNKNOWN || code == EXIT_HOLDS,
        "expected unknown or holds, got {code}: {out}"
    );
    if code == EXIT_UNKNOWN {
        assert!(out.contains("outcome: unknown"));
    }
}

#[test]
fn witness_files_drive_the_j_deciders() {
    let (code, out) = run_cli(&[
        "greens",
        "leqJ",
        &fixture("a61.json"),
        &fixture("b61.json"),
        "--witness",
        &fixture("x61-witness.json"),
    ]);
    assert_eq!(code, EXIT_HOLDS, "{out}");

    let (code, out) = run_cli(&[
        "greens",
        "relJ",
        &fixture("a62.json"),
        &fixture("b62.json"),
        "--witness",
        &fixture("mu62-witness.json"),
    ]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    assert!(out.contains("outcome: holds"));
}

#[test]
fn rank_reports_match_the_bundled_values() {
    let (code, out) = run_cli(&["rank", &fixture("g27.json")]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    assert!(out.contains("Gondran-Minoux column rank: 2"), "{out}");

    let (code, out) = run_cli(&["rank", &fixture("g27.json"), "--flavor-override", "TBar"]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    assert!(out.contains("Gondran-Minoux column rank: 1"), "{out}");
    assert!(
        out.contains("determinantal rank: unsupported over TBar"),
        "{out}"
    );

    let (code, out) = run_cli(&["rank", &fixture("zero3.json")]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    for line in [
        "row rank: 0",
        "column rank: 0",
        "factor rank: 0",
        "tropical rank: 0",
        "determinantal rank: 0",
        "Gondran-Minoux row rank: 0",
        "Gondran-Minoux column rank: 0",
    ] {
        assert!(out.contains(line), "missing {line:?} in {out}");
    }
}

#[test]
fn json_mode_mirrors_the_human_output() {
    let (code_h, human) = run_cli(&["greens", "relD", &fixture("a61.json"), &fixture("b61.json")]);
    let (code_j, json) = run_cli(&[
        "--json",
        "greens",
        "relD",
        &fixture("a61.json"),
        &fixture("b61.json"),
    ]);
    assert_eq!(code_h, code_j);
    let v: serde_json::Value = serde_json::from_str(&json).expect("valid JSON");
    assert_eq!(v["outcome"], "Fails");
    assert!(human.contains("outcome: fails"));
    // the machine payload carries the same obstruction values
    assert_eq!(v["obstruction"]["GenDimMismatch"]["lhs"], 4);
    assert_eq!(v["obstruction"]["GenDimMismatch"]["rhs"], 3);
}

#[test]
fn examples_and_fuzz_subcommands() {
    let (code, out) = run_cli(&["examples", "6.1"]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    assert!(out.contains("all claims verified"));

    let (code, out) = run_cli(&["examples", "7.gm"]);
    assert_eq!(code, EXIT_HOLDS, "{out}");

    let (code, out) = run_cli(&["fuzz", "duality", "5", "42"]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    assert!(out.contains("0 violations"));

    let (code, _) = run_cli(&["fuzz", "no-such-suite", "5", "42"]);
    assert_eq!(code, EXIT_ERROR);
}

#[test]
fn fuzz_runs_are_reproducible() {
    let (_, a) = run_cli(&["fuzz", "metric-duality", "10", "7"]);
    let (_, b) = run_cli(&["fuzz", "metric-duality", "10", "7"]);
    assert_eq!(a, b);
}

#[test]
fn export_figure_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("fig.csv");
    let svg = dir.path().join("fig.svg");
    let (code, out) = run_cli(&[
        "export-figure",
        &fixture("b61.json"),
        "--space",
        "cols",
        "--out-csv",
        csv.to_str().unwrap(),
        "--out-svg",
        svg.to_str().unwrap(),
        "--samples",
        "30",
        "--seed",
        "3",
    ]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    assert!(out.contains("vertex (0, 0)"));
    assert!(out.contains("vertex (1, -2)"));
    assert!(out.contains("vertex (3, -3)"));

    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("kind,x1,x2,x3\r\n"));
    assert!(csv_text.contains("vertex,1,-2,0"));
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.starts_with("<svg"));

    // chart override: the 6.2 matrix needs pivoting on coordinate 3
    let csv2 = dir.path().join("fig62.csv");
    let (code, out) = run_cli(&[
        "export-figure",
        &fixture("a62.json"),
        "--space",
        "cols",
        "--out-csv",
        csv2.to_str().unwrap(),
        "--chart-coord",
        "3",
    ]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    assert!(out.contains("vertex (-inf, -inf)"));
    assert!(out.contains("vertex (0, -inf)"));
    assert!(out.contains("vertex (1, 1)"));

    // without the override the export is honestly refused
    let (code, _) = run_cli(&[
        "export-figure",
        &fixture("a62.json"),
        "--space",
        "cols",
        "--out-csv",
        dir.path().join("nope.csv").to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_ERROR);
}

#[test]
fn documents_round_trip_through_the_parser() {
    for name in ["a61.json", "a62.json", "a63.json", "g27.json", "zero3.json"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let m = parse_matrix(&text).unwrap();
        let re = parse_matrix(&serialize_matrix(&m)).unwrap();
        assert_eq!(m, re);
        assert_eq!(m.flavor(), re.flavor());
    }
}

#[test]
fn iso_diag_is_report_only() {
    let (code, out) = run_cli(&[
        "greens",
        "isoDiag",
        &fixture("a63.json"),
        &fixture("a63.json"),
        "--metric-mode",
        "chart",
    ]);
    assert_eq!(code, EXIT_HOLDS, "{out}");
    assert!(out.contains("report only"));
    assert!(out.contains("{1, 4, 5}"));
}
