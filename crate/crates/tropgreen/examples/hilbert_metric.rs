//! The tropical Hilbert projective metric in both evaluation modes, and
//! its exact Lipschitz comparison with the Euclidean metric on the chart.
//!
//! ```bash
//! cargo run -p tropgreen --example hilbert_metric
//! ```

use tropgreen::fixtures;
use tropgreen::linalg::TropVector;
use tropgreen::metric::{d_chart, d_hilbert, distance_multiset, lipschitz_check, MetricMode};
use tropgreen::scalar::{SemiringFlavor, TropScalar};

fn fmt_multiset(ms: &[tropgreen::metric::DistanceValue]) -> String {
    let parts: Vec<String> = ms.iter().map(|d| d.scalar().to_text()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn main() {
    let x = TropVector::from_ints(SemiringFlavor::FT, &[0, 0, 0]);
    let y = TropVector::from_ints(SemiringFlavor::FT, &[1, 5, 0]);
    println!("d_H((0,0,0), (1,5,0)) = {}", d_hilbert(&x, &y).unwrap());
    println!(
        "scaling is free:  d_H(x, 7⊗x) = {}",
        d_hilbert(&x, &x.scale(&TropScalar::int(7))).unwrap()
    );

    let u = vec![TropScalar::int(0), TropScalar::int(0)];
    let v = vec![TropScalar::int(1), TropScalar::int(5)];
    println!(
        "chart evaluation of the same pair drops a coordinate: d_chart = {}",
        d_chart(&u, &v).unwrap()
    );

    // the 3×3 example: the two modes tell different stories
    let a = fixtures::a63();
    let rows: Vec<TropVector> = a.rows().collect();
    let cols: Vec<TropVector> = a.cols().collect();
    println!();
    println!("3×3 example, pairwise distance multisets:");
    println!(
        "  rows    chart {}   full {}",
        fmt_multiset(&distance_multiset(&rows, MetricMode::Chart).unwrap()),
        fmt_multiset(&distance_multiset(&rows, MetricMode::Full).unwrap()),
    );
    println!(
        "  columns chart {}   full {}",
        fmt_multiset(&distance_multiset(&cols, MetricMode::Chart).unwrap()),
        fmt_multiset(&distance_multiset(&cols, MetricMode::Full).unwrap()),
    );
    println!(
        "the projective metric agrees on rows and columns (duality is an \
         isometry); chart values depend on the chosen presentation."
    );

    // exact Lipschitz comparison, squared form: d_H² ≤ 2 d_E², d_E² ≤ (n-1) d_H²
    println!();
    let pairs = [([0, 0], [1, 5]), ([2, -5], [2, -5]), ([-3, 4], [9, 4])];
    for (pu, pv) in pairs {
        let cu: Vec<TropScalar> = pu.iter().map(|&n| TropScalar::int(n)).collect();
        let cv: Vec<TropScalar> = pv.iter().map(|&n| TropScalar::int(n)).collect();
        println!(
            "Lipschitz bounds hold at ({:?}, {:?}): {}",
            pu,
            pv,
            lipschitz_check(&cu, &cv).unwrap()
        );
    }
}
