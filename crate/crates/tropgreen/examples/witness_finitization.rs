//! Moving sandwich witnesses down the semiring chain: factors over `TBar`
//! lose their `+inf` entries (replaced by 0), factors over `T` lose their
//! `-inf` entries (replaced by a computed δ), and the product `A = P⊗B⊗Q`
//! is preserved exactly at every step.
//!
//! ```bash
//! cargo run -p tropgreen --example witness_finitization
//! ```

use tropgreen::greens::{finitize_t_witness, finitize_tbar_witness};
use tropgreen::io::serialize_matrix;
use tropgreen::linalg::mat_mul;
use tropgreen::scalar::{SemiringFlavor, TropScalar};
use tropgreen::TropMatrix;

fn main() {
    // a T-flavored sandwich around a finitary core
    let b = TropMatrix::from_ints(SemiringFlavor::FT, &[&[0, 2], &[1, 0]]);
    let p = TropMatrix::from_rows(
        SemiringFlavor::T,
        vec![
            vec![TropScalar::int(0), TropScalar::NegInf],
            vec![TropScalar::NegInf, TropScalar::int(-1)],
        ],
    )
    .unwrap();
    let q = TropMatrix::from_rows(
        SemiringFlavor::T,
        vec![
            vec![TropScalar::int(1), TropScalar::NegInf],
            vec![TropScalar::NegInf, TropScalar::int(0)],
        ],
    )
    .unwrap();
    let a = mat_mul(&mat_mul(&p, &b).unwrap(), &q)
        .unwrap()
        .with_flavor(SemiringFlavor::FT)
        .unwrap();

    println!("A = P ⊗ B ⊗ Q with -inf entries in P and Q:");
    println!("P = {}", serialize_matrix(&p));
    println!("A = {}", serialize_matrix(&a));

    let (pp, qp) = finitize_t_witness(&p, &b, &q, &a).unwrap();
    println!();
    println!("after replacing every -inf by the computed δ:");
    println!("P' = {}", serialize_matrix(&pp));
    println!("Q' = {}", serialize_matrix(&qp));
    let again = mat_mul(&mat_mul(&pp, &b).unwrap(), &qp).unwrap();
    println!("A = P' ⊗ B ⊗ Q' still: {}", again == a);

    // and one level up: +inf entries over TBar clamp to 0
    let b2 = TropMatrix::from_rows(
        SemiringFlavor::T,
        vec![
            vec![TropScalar::int(0), TropScalar::NegInf],
            vec![TropScalar::NegInf, TropScalar::int(0)],
        ],
    )
    .unwrap();
    let p2 = TropMatrix::from_rows(
        SemiringFlavor::TBar,
        vec![
            vec![TropScalar::int(0), TropScalar::PosInf],
            vec![TropScalar::NegInf, TropScalar::int(0)],
        ],
    )
    .unwrap();
    let q2 = b2.clone().with_flavor(SemiringFlavor::TBar).unwrap();
    let a2 = mat_mul(&mat_mul(&p2, &b2).unwrap(), &q2).unwrap();
    match a2.with_flavor(SemiringFlavor::T) {
        Ok(a2) => {
            let (pp2, qp2) = finitize_tbar_witness(&p2, &b2, &q2, &a2).unwrap();
            println!();
            println!("+inf factor entry clamped to 0:");
            println!("P' = {}", serialize_matrix(&pp2));
            let again = mat_mul(&mat_mul(&pp2, &b2).unwrap(), &qp2).unwrap();
            println!("product preserved: {}", again == a2);
        }
        Err(_) => println!("(+inf reached the product; pick factors whose product stays in T)"),
    }
}
