//! Tropical convex sets: membership certificates, weak bases, generator
//! dimension, and why generator dimension misbehaves under inclusion.
//!
//! ```bash
//! cargo run -p tropgreen --example weak_basis
//! ```

use tropgreen::convex::{surjection_gen_dim_obstruction, ConvexSet};
use tropgreen::fixtures;

fn fmt(v: &tropgreen::TropVector) -> String {
    let parts: Vec<String> = v.entries().iter().map(|e| e.to_text()).collect();
    format!("({})", parts.join(", "))
}

fn main() {
    let a = fixtures::a61();
    let b = fixtures::b61();
    let ca = ConvexSet::col_space(&a);
    let cb = ConvexSet::col_space(&b);

    println!("weak basis of C(A) ({} classes):", ca.generator_dimension());
    for v in ca.weak_basis() {
        println!("  {}", fmt(v));
    }
    println!("weak basis of C(B) ({} classes):", cb.generator_dimension());
    for v in cb.weak_basis() {
        println!("  {}", fmt(v));
    }

    // every column of A is a combination of B's columns, with certificate
    println!();
    println!("C(A) ⊆ C(B), certified column by column:");
    for j in 0..a.n_cols() {
        let col = a.col(j);
        let cert = cb.member(&col).unwrap().expect("contained");
        let coeffs: Vec<String> = cert.iter().map(|c| c.to_text()).collect();
        println!("  col {j} = combination with α = ({})", coeffs.join(", "));
    }

    // ... and yet the smaller-looking space needs MORE generators
    println!();
    println!(
        "generator dimension grows under inclusion here: dim C(A) = {} > {} = dim C(B)",
        ca.generator_dimension(),
        cb.generator_dimension()
    );
    println!(
        "so no linear surjection C(B) ↠ C(A) can exist: {}",
        surjection_gen_dim_obstruction(&cb, &ca)
    );

    // dual dimension: an invariant of the set, not its presentation
    let rows = ConvexSet::row_space(&fixtures::a63());
    println!();
    println!(
        "row space of the 3×3 example: generator dimension {}, dual dimension {}",
        rows.generator_dimension(),
        rows.dual_dimension().unwrap()
    );
}
