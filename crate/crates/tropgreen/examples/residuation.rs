//! Matrix products, the scalar product and principal solutions.
//!
//! Residuation is the workhorse of the whole crate: the greatest `P` with
//! `P ⊗ M ≤ A` is computable entrywise, and one-sided equations are
//! solvable exactly when the principal solution achieves equality.
//!
//! ```bash
//! cargo run -p tropgreen --example residuation
//! ```

use tropgreen::fixtures;
use tropgreen::io::serialize_matrix;
use tropgreen::linalg::{left_residual, mat_mul, right_residual, scalar_product, TropVector};
use tropgreen::scalar::SemiringFlavor;

fn main() {
    let x = TropVector::from_ints(SemiringFlavor::FT, &[0, 0]);
    let y = TropVector::from_ints(SemiringFlavor::FT, &[1, 2]);
    println!(
        "⟨(0,0) | (1,2)⟩ = max{{λ : λ⊗(0,0) ≤ (1,2)}} = {}",
        scalar_product(&x, &y).unwrap()
    );

    // the bundled 4×4 pair: A = B ⊗ X is solvable, so the principal
    // solution of B ⊗ ? = A must achieve it
    let a = fixtures::a61();
    let b = fixtures::b61();
    let q = left_residual(&b, &a).unwrap();
    let product = mat_mul(&b, &q).unwrap();
    println!();
    println!("greatest Q with B ⊗ Q ≤ A:");
    println!("{}", serialize_matrix(&q));
    println!("B ⊗ Q = A holds: {}", product == a);

    // the Galois property in action: any P below the residual stays below A
    let p_star = right_residual(&a, &b).unwrap();
    let below = mat_mul(&p_star, &b).unwrap();
    println!();
    println!(
        "greatest P with P ⊗ B ≤ A gives P* ⊗ B ≤ A entrywise: {}",
        below.entrywise_leq(&a)
    );

    // row-space containment is one principal-solution test away
    let contained = mat_mul(&p_star, &b).unwrap() == a;
    println!("R(A) ⊆ R(B) decided by that single test: {contained}");
}
