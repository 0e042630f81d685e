//! The D-class decider searches for module isomorphisms between row
//! spaces: bijections between weak bases plus scalar offsets, with
//! feasibility decided by difference constraints and every candidate
//! re-verified by the exact extension checker.
//!
//! Run on the bundled 3×3 matrix and its transpose it finds a genuine
//! isomorphism — a fact the chart-label distance multisets {1,4,5} vs
//! {2,3,5} would seem to forbid, until one notices those numbers depend on
//! the presentation while the projective metric itself gives {3,5,5} on
//! both sides.
//!
//! ```bash
//! cargo run -p tropgreen --example row_space_isomorphism
//! ```

use tropgreen::convex::{ConvexSet, GeneratorMap};
use tropgreen::fixtures;
use tropgreen::greens::{rel_d_decide, DecideConfig, Witness};
use tropgreen::linalg::TropVector;
use tropgreen::metric::{distance_multiset, MetricMode};

fn fmt(v: &TropVector) -> String {
    let parts: Vec<String> = v.entries().iter().map(|e| e.to_text()).collect();
    format!("({})", parts.join(", "))
}

fn main() {
    let a = fixtures::a63();
    let at = a.transpose();

    let rows: Vec<TropVector> = a.rows().collect();
    let cols: Vec<TropVector> = at.rows().collect();
    let ms = |pts: &[TropVector], mode| {
        let d = distance_multiset(pts, mode).unwrap();
        let s: Vec<String> = d.iter().map(|x| x.scalar().to_text()).collect();
        format!("{{{}}}", s.join(", "))
    };
    println!("weak-basis distance multisets of R(A) vs R(Aᵀ):");
    println!(
        "  chart labels: {} vs {}",
        ms(&rows, MetricMode::Chart),
        ms(&cols, MetricMode::Chart)
    );
    println!(
        "  projective metric: {} vs {}",
        ms(&rows, MetricMode::Full),
        ms(&cols, MetricMode::Full)
    );

    let v = rel_d_decide(&a, &at, &DecideConfig::default()).unwrap();
    println!();
    println!("rel_D(A, Aᵀ) = {}", v.outcome);
    let Witness::RowIso { pi, lambdas } = &v.witnesses[0].witness else {
        panic!("Holds always carries a witness");
    };
    assert!(v.verify_witnesses(&a, &at), "witnesses re-verify");

    let dom = ConvexSet::row_space(&a);
    let cod = ConvexSet::row_space(&at);
    let w: Vec<TropVector> = dom.weak_basis().into_iter().cloned().collect();
    let wp: Vec<TropVector> = cod.weak_basis().into_iter().cloned().collect();
    println!("certified isomorphism (π = {pi:?}):");
    for (i, wi) in w.iter().enumerate() {
        println!(
            "  f{} : {} ↦ {} ⊗ {} = {}",
            i,
            fmt(wi),
            lambdas[i].to_text(),
            fmt(&wp[pi[i]]),
            fmt(&wp[pi[i]].scale(&lambdas[i]))
        );
    }

    // apply the certified map to an arbitrary member of R(A)
    let images: Vec<TropVector> = (0..w.len()).map(|i| wp[pi[i]].scale(&lambdas[i])).collect();
    let f = GeneratorMap::new(dom.clone(), images).unwrap();
    let point = w[0]
        .join(&w[1].scale(&tropgreen::TropScalar::int(2)).clone())
        .unwrap();
    let image = f.apply(&point).unwrap();
    println!();
    println!("applying f to {} gives {}", fmt(&point), fmt(&image));
    println!(
        "the image lies in R(Aᵀ): {}",
        cod.member(&image).unwrap().is_some()
    );
}
