//! The duality maps θ_A(x) = A ⊗ (-x)ᵀ and θ'_A(x) = (-x)ᵀ ⊗ A between a
//! matrix's row and column space: mutually inverse, order reversing,
//! scaling anti-compatible, and isometric for the projective metric.
//!
//! ```bash
//! cargo run -p tropgreen --example duality_maps
//! ```

use tropgreen::duality::{check_metric_duality, theta, theta_prime};
use tropgreen::fixtures;
use tropgreen::metric::d_hilbert;
use tropgreen::scalar::TropScalar;

fn fmt(v: &tropgreen::TropVector) -> String {
    let parts: Vec<String> = v.entries().iter().map(|e| e.to_text()).collect();
    format!("({})", parts.join(", "))
}

fn main() {
    let a = fixtures::a63();
    println!("A is the 3×3 example; its rows generate R(A), its columns C(A).");

    for i in 0..3 {
        let row = a.row(i);
        let img = theta(&a, &row).unwrap();
        let back = theta_prime(&a, &img).unwrap();
        println!(
            "θ{} : {} ↦ {} ↦ back to {}",
            i,
            fmt(&row),
            fmt(&img),
            fmt(&back)
        );
    }

    // order reversal: x ≤ y flips to θ(y) ≤ θ(x)
    let x = a.row(0);
    let y = a.row(0).join(&a.row(1)).unwrap();
    println!();
    println!("x ≤ y: {}", x.leq(&y));
    println!(
        "θ(y) ≤ θ(x): {}",
        theta(&a, &y).unwrap().leq(&theta(&a, &x).unwrap())
    );

    // scaling anti-compatibility
    let lam = TropScalar::int(5);
    let lhs = theta(&a, &x.scale(&lam)).unwrap();
    let rhs = theta(&a, &x).unwrap().scale(&lam.neg_unchecked());
    println!("θ(5 ⊗ x) = (-5) ⊗ θ(x): {}", lhs == rhs);

    // the maps are isometries of the projectivized spaces
    let d_before = d_hilbert(&a.row(1), &a.row(2)).unwrap();
    let d_after = d_hilbert(
        &theta(&a, &a.row(1)).unwrap(),
        &theta(&a, &a.row(2)).unwrap(),
    )
    .unwrap();
    println!();
    println!("d_H(row 1, row 2) = {d_before}, distance of the θ-images = {d_after}");

    let report = check_metric_duality(&a, 25, 2024).unwrap();
    println!(
        "sampled isometry check: {} pairs compared, pass = {}",
        report.pairs_checked, report.pass
    );
}
