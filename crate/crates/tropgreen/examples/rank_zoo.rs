//! The rank zoo: row/column rank, factor-rank bounds, Gondran-Minoux,
//! determinantal and tropical rank — and why they disagree.
//!
//! ```bash
//! cargo run -p tropgreen --example rank_zoo
//! ```

use tropgreen::fixtures;
use tropgreen::ranks::{gm_rank, strongly_regular, Axis, RankOptions, RankReport};
use tropgreen::scalar::SemiringFlavor;
use tropgreen::TropMatrix;

fn print_report(label: &str, r: &RankReport) {
    println!("{label} (over {}):", r.flavor);
    println!("  row rank            {}", r.row_rank);
    println!("  column rank         {}", r.col_rank);
    println!("  factor rank         {}", r.factor);
    println!("  tropical rank       {}", r.tropical);
    match r.determinantal {
        Some(d) => println!("  determinantal rank  {d}"),
        None => println!("  determinantal rank  (unsupported over TBar)"),
    }
    if let (Some(gr), Some(gc)) = (&r.gm_row, &r.gm_col) {
        println!("  GM row rank         {gr}");
        println!("  GM column rank      {gc}");
    }
    for flag in &r.consistency {
        assert!(flag.ok, "consistency flag violated: {}", flag.name);
    }
    println!("  all consistency flags ok");
}

fn main() {
    let opts = RankOptions::default();

    print_report(
        "3×3 worked example",
        &RankReport::compute(&fixtures::a63(), &opts).unwrap(),
    );
    println!();
    print_report(
        "4×4 matrix B",
        &RankReport::compute(&fixtures::b61(), &opts).unwrap(),
    );

    // the 2×2 whose GM rank depends on the ambient semiring
    let g = fixtures::g27();
    println!();
    println!("[[0, 0], [0, 1]] — Gondran-Minoux column rank depends on the semiring:");
    println!(
        "  over T:    {}",
        gm_rank(&g, Axis::Columns, SemiringFlavor::T, &opts).unwrap()
    );
    println!(
        "  over TBar: {} (a balanced relation appears once +inf coefficients exist)",
        gm_rank(&g, Axis::Columns, SemiringFlavor::TBar, &opts).unwrap()
    );

    // strong regularity = unique finite optimal assignment
    println!();
    let id = TropMatrix::identity(SemiringFlavor::T, 2).unwrap();
    let flat = TropMatrix::from_ints(SemiringFlavor::FT, &[&[0, 0], &[0, 0]]);
    println!(
        "strongly regular: tropical identity {} / all-zero 2×2 {}",
        strongly_regular(&id).unwrap(),
        strongly_regular(&flat).unwrap()
    );
}
