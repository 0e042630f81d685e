//! Exact scalar arithmetic in the three semirings.
//!
//! ```bash
//! cargo run -p tropgreen --example scalars
//! ```

use tropgreen::scalar::{SemiringFlavor, TropScalar};

fn main() {
    let two = TropScalar::int(2);
    let three = TropScalar::int(3);
    let half = TropScalar::ratio(1, 2);

    println!("⊕ is maximum:      2 ⊕ 3   = {}", two.t_add(&three));
    println!("⊗ is addition:     2 ⊗ 3   = {}", two.t_mul(&three));
    println!("rationals stay exact: 2 ⊗ 1/2 = {}", two.t_mul(&half));

    let ninf = TropScalar::NegInf;
    let pinf = TropScalar::PosInf;
    println!();
    println!(
        "-inf is the ⊕ identity:  -inf ⊕ 5 = {}",
        ninf.t_add(&TropScalar::int(5))
    );
    println!(
        "+inf is the top:         +inf ⊕ 7 = {}",
        pinf.t_add(&TropScalar::int(7))
    );
    println!(
        "the one exception:       (-inf) ⊗ (+inf) = {}",
        ninf.t_mul(&pinf)
    );

    println!();
    println!("the involution x ↦ -x is total on FT and TBar:");
    println!("  -(3)    = {}", three.t_neg(SemiringFlavor::FT).unwrap());
    println!("  -(-inf) = {}", ninf.t_neg(SemiringFlavor::TBar).unwrap());
    println!("but undefined at -inf over T:");
    println!(
        "  -(-inf) over T → {:?}",
        ninf.t_neg(SemiringFlavor::T).unwrap_err()
    );

    println!();
    println!("scalar text syntax round-trips exactly:");
    for text in ["0", "-3", "7/2", "-inf", "+inf"] {
        let v = TropScalar::parse(text).unwrap();
        println!("  {text:>5} → {v}");
    }
}
