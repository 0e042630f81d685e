//! The command-line surface. All logic lives in the library; this module
//! parses arguments, dispatches, prints and maps outcomes to exit codes.
//!
//! Exit codes for decider commands: 0 = holds, 1 = fails, 2 = unknown,
//! 3 = usage error, 4 = IO/parse/domain error. `examples` and `fuzz` exit
//! 0 on a clean pass and 1 otherwise.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bundles::run_bundles;
use crate::error::{Error, Result};
use crate::figure::{export_figure, Space};
use crate::fuzz::run_suite;
use crate::greens::{
    isometry_diagnostics, leq_j_decide, leq_l, leq_r, rel_d_decide, rel_h, rel_j_decide, rel_l,
    rel_r, DecideConfig, Outcome, Verdict,
};
use crate::io::{read_matrix, read_witness};
use crate::metric::MetricMode;
use crate::ranks::{RankOptions, RankReport};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_ERROR: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "tropgreen",
    about = "Exact tropical linear algebra: Green's relations, duality, metric and ranks",
    disable_help_subcommand = true
)]
struct Cli {
    /// Print machine-readable JSON instead of the human report
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a Green's relation between two matrices
    Greens(GreensArgs),
    /// Print the full rank report of a matrix
    Rank(RankArgs),
    /// Run a bundled worked example (6.1, 6.2, 6.3, 7.gm or all)
    Examples { name: String },
    /// Export a projective row/column space as CSV and SVG
    ExportFigure(FigureArgs),
    /// Run a named property suite with deterministic seeding
    Fuzz {
        suite: String,
        trials: usize,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Relation {
    #[value(name = "leqL")]
    LeqL,
    #[value(name = "leqR")]
    LeqR,
    #[value(name = "relL")]
    RelL,
    #[value(name = "relR")]
    RelR,
    #[value(name = "relH")]
    RelH,
    #[value(name = "leqJ")]
    LeqJ,
    #[value(name = "relJ")]
    RelJ,
    #[value(name = "relD")]
    RelD,
    /// report-only isometry diagnostics of the projective row spaces
    #[value(name = "isoDiag")]
    IsoDiag,
}

#[derive(Args, Debug)]
struct GreensArgs {
    relation: Relation,
    file_a: PathBuf,
    file_b: PathBuf,
    /// Alternation rounds per seed for the two-sided searches
    #[arg(long, default_value_t = 200)]
    budget: usize,
    /// Master seed for randomized search seeds and sampling
    #[arg(long, default_value_t = 0x7001)]
    seed: u64,
    /// Witness-hint file (JSON with optional p, q, embedding matrices)
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Trust the morphism-extension criterion as complete (D-class search
    /// may then emit Fails on exhaustion)
    #[arg(long)]
    trust_extension: bool,
    /// Metric mode for isoDiag
    #[arg(long, value_enum, default_value_t = MetricModeArg::Full)]
    metric_mode: MetricModeArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MetricModeArg {
    Full,
    Chart,
}

impl From<MetricModeArg> for MetricMode {
    fn from(m: MetricModeArg) -> Self {
        match m {
            MetricModeArg::Full => MetricMode::Full,
            MetricModeArg::Chart => MetricMode::Chart,
        }
    }
}

#[derive(Args, Debug)]
struct RankArgs {
    file: PathBuf,
    /// Re-validate the entries under a different semiring before ranking
    #[arg(long)]
    flavor_override: Option<String>,
    /// Raise the minor/subset enumeration cap (default 5)
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args, Debug)]
struct FigureArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    space: SpaceArg,
    #[arg(long)]
    out_csv: Option<PathBuf>,
    #[arg(long)]
    out_svg: Option<PathBuf>,
    /// Sampled hull points
    #[arg(long, default_value_t = 120)]
    samples: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Chart on this coordinate (1-based) instead of the last
    #[arg(long)]
    chart_coord: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceArg {
    Rows,
    Cols,
}

/// Entry point used by the binary.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let mut out = String::new();
    let code = run(&args, &mut out);
    print!("{out}");
    code
}

/// Parse and execute; output is written to `out`. Kept separate from the
/// process boundary so tests can drive the full CLI in memory.
pub fn run(args: &[String], out: &mut String) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            out.push_str(&e.to_string());
            out.push('\n');
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_HOLDS
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            out.push_str(&format!("error: {e}\n"));
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32> {
    match &cli.command {
        Command::Greens(args) => cmd_greens(args, cli.json, out),
        Command::Rank(args) => cmd_rank(args, cli.json, out),
        Command::Examples { name } => cmd_examples(name, cli.json, out),
        Command::ExportFigure(args) => cmd_export_figure(args, out),
        Command::Fuzz {
            suite,
            trials,
            seed,
        } => cmd_fuzz(suite, *trials, *seed, cli.json, out),
    }
}

fn verdict_exit(v: &Verdict) -> i32 {
    match v.outcome {
        Outcome::Holds => EXIT_HOLDS,
        Outcome::Fails => EXIT_FAILS,
        Outcome::Unknown => EXIT_UNKNOWN,
    }
}

fn print_verdict(v: &Verdict, json: bool, out: &mut String) {
    if json {
        out.push_str(&serde_json::to_string_pretty(v).expect("verdicts serialize"));
        out.push('\n');
        return;
    }
    out.push_str(&format!("outcome: {}\n", v.outcome));
    for w in &v.witnesses {
        out.push_str(&format!(
            "witness ({:?}): {}\n",
            w.claim,
            serde_json::to_string(&w.witness).expect("witnesses serialize")
        ));
    }
    if let Some(o) = &v.obstruction {
        out.push_str(&format!("obstruction: {o}\n"));
    }
    out.push_str(&format!(
        "budget: rounds {}, seeds {}, bijections {}, systems {}\n",
        v.budget.residual_rounds,
        v.budget.seeds_tried,
        v.budget.bijections_tried,
        v.budget.systems_solved
    ));
}

fn cmd_greens(args: &GreensArgs, json: bool, out: &mut String) -> Result<i32> {
    let a = read_matrix(&args.file_a)?;
    let b = read_matrix(&args.file_b)?;
    let cfg = DecideConfig {
        budget_rounds: args.budget,
        seed: args.seed,
        trust_extension: args.trust_extension,
        ..DecideConfig::default()
    };
    let hint = args.witness.as_deref().map(read_witness).transpose()?;
    let verdict = match args.relation {
        Relation::LeqL => leq_l(&a, &b)?,
        Relation::LeqR => leq_r(&a, &b)?,
        Relation::RelL => rel_l(&a, &b)?,
        Relation::RelR => rel_r(&a, &b)?,
        Relation::RelH => rel_h(&a, &b)?,
        Relation::LeqJ => leq_j_decide(&a, &b, &cfg, hint.as_ref())?,
        Relation::RelJ => rel_j_decide(&a, &b, &cfg, hint.as_ref(), hint.as_ref())?,
        Relation::RelD => rel_d_decide(&a, &b, &cfg)?,
        Relation::IsoDiag => {
            let report = isometry_diagnostics(&a, &b, args.metric_mode.into(), args.seed)?;
            if json {
                out.push_str(&serde_json::to_string_pretty(&report).expect("reports serialize"));
                out.push('\n');
            } else {
                out.push_str(&format!(
                    "isometry diagnostics ({} mode, report only, not a verdict)\n",
                    report.mode
                ));
                let fmt = |ms: &[crate::metric::DistanceValue]| {
                    let v: Vec<String> = ms.iter().map(|d| d.scalar().to_text()).collect();
                    format!("{{{}}}", v.join(", "))
                };
                out.push_str(&format!(
                    "PR(A) weak-basis multiset: {}\n",
                    fmt(&report.multiset_a)
                ));
                out.push_str(&format!(
                    "PR(B) weak-basis multiset: {}\n",
                    fmt(&report.multiset_b)
                ));
                if let Some(r) = report.multiset_a_realizable_in_b {
                    out.push_str(&format!(
                        "multiset of PR(A) realizable among sampled PR(B) points: {r}\n"
                    ));
                }
            }
            return Ok(EXIT_HOLDS);
        }
    };
    // every emitted witness must survive re-verification
    debug_assert!(verdict.outcome != Outcome::Holds || verdict.verify_witnesses(&a, &b));
    print_verdict(&verdict, json, out);
    Ok(verdict_exit(&verdict))
}

fn cmd_rank(args: &RankArgs, json: bool, out: &mut String) -> Result<i32> {
    let mut m = read_matrix(&args.file)?;
    if let Some(f) = &args.flavor_override {
        let flavor = match f.as_str() {
            "FT" => crate::scalar::SemiringFlavor::FT,
            "T" => crate::scalar::SemiringFlavor::T,
            "TBar" => crate::scalar::SemiringFlavor::TBar,
            other => {
                return Err(Error::Parse {
                    place: "--flavor-override".into(),
                    msg: format!("unknown semiring {other:?}"),
                })
            }
        };
        m = m.with_flavor(flavor)?;
    }
    let opts = RankOptions {
        enum_cap: args.max_n.unwrap_or(5),
        ..RankOptions::default()
    };
    let report = RankReport::compute(&m, &opts)?;
    if json {
        out.push_str(&serde_json::to_string_pretty(&report).expect("reports serialize"));
        out.push('\n');
    } else {
        out.push_str(&format!("semiring: {}\n", report.flavor));
        out.push_str(&format!("row rank: {}\n", report.row_rank));
        out.push_str(&format!("column rank: {}\n", report.col_rank));
        out.push_str(&format!("factor rank: {}\n", report.factor));
        out.push_str(&format!("tropical rank: {}\n", report.tropical));
        match report.determinantal {
            Some(d) => out.push_str(&format!("determinantal rank: {d}\n")),
            None => out.push_str("determinantal rank: unsupported over TBar\n"),
        }
        match (&report.gm_row, &report.gm_col) {
            (Some(r), Some(c)) => {
                out.push_str(&format!("Gondran-Minoux row rank: {r}\n"));
                out.push_str(&format!("Gondran-Minoux column rank: {c}\n"));
            }
            _ => out.push_str("Gondran-Minoux ranks: unsupported over FT\n"),
        }
        for flag in &report.consistency {
            out.push_str(&format!(
                "consistency [{}]: {}\n",
                flag.name,
                if flag.ok { "ok" } else { "VIOLATED" }
            ));
        }
    }
    Ok(if report.all_consistent() {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    })
}

fn cmd_examples(name: &str, json: bool, out: &mut String) -> Result<i32> {
    let reports = run_bundles(name)?;
    if json {
        out.push_str(&serde_json::to_string_pretty(&reports).expect("reports serialize"));
        out.push('\n');
    } else {
        for r in &reports {
            out.push_str(&format!("== example {} ==\n", r.name));
            for line in &r.lines {
                out.push_str(&format!(
                    "[{}] {} — {}\n",
                    if line.pass { "PASS" } else { "FAIL" },
                    line.claim,
                    line.detail
                ));
            }
            for f in &r.findings {
                out.push_str(&format!("note: {f}\n"));
            }
        }
    }
    let all_pass = reports.iter().all(|r| r.pass());
    out.push_str(if all_pass {
        "all claims verified\n"
    } else {
        "some claims FAILED\n"
    });
    Ok(if all_pass { EXIT_HOLDS } else { EXIT_FAILS })
}

fn cmd_export_figure(args: &FigureArgs, out: &mut String) -> Result<i32> {
    let m = read_matrix(&args.file)?;
    let space = match args.space {
        SpaceArg::Rows => Space::Rows,
        SpaceArg::Cols => Space::Cols,
    };
    let pivot = match args.chart_coord {
        Some(0) => {
            return Err(Error::Parse {
                place: "--chart-coord".into(),
                msg: "coordinates are 1-based".into(),
            })
        }
        Some(k) => Some(k - 1),
        None => None,
    };
    let data = export_figure(
        &m,
        space,
        args.out_csv.as_deref(),
        args.out_svg.as_deref(),
        args.samples,
        args.seed,
        pivot,
    )?;
    out.push_str(&format!(
        "exported {} vertices and {} samples",
        data.vertices.len(),
        data.samples.len()
    ));
    if data.skipped_samples > 0 {
        out.push_str(&format!(
            " ({} samples skipped: chart undefined)",
            data.skipped_samples
        ));
    }
    out.push('\n');
    for v in &data.plot_vertices {
        out.push_str(&format!("vertex ({}, {})\n", v.0.to_text(), v.1.to_text()));
    }
    Ok(EXIT_HOLDS)
}

fn cmd_fuzz(suite: &str, trials: usize, seed: u64, json: bool, out: &mut String) -> Result<i32> {
    let report = run_suite(suite, trials, seed)?;
    if json {
        out.push_str(&serde_json::to_string_pretty(&report).expect("reports serialize"));
        out.push('\n');
    } else {
        out.push_str(&format!(
            "suite {}: {} trials, {} checks, {} violations\n",
            report.suite,
            report.trials,
            report.checks,
            report.violations.len()
        ));
        for v in &report.violations {
            out.push_str(&format!("violation: {v}\n"));
        }
    }
    Ok(if report.pass() {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    })
}
