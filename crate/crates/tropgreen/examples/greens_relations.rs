//! Deciding Green's relations on the bundled 4×4 pairs: exact one-sided
//! deciders, the J-order semidecider with verified witnesses and sound
//! obstructions, and witness hints.
//!
//! ```bash
//! cargo run -p tropgreen --example greens_relations
//! ```

use tropgreen::fixtures;
use tropgreen::greens::{
    leq_j_decide, leq_r, rel_d_decide, rel_h, rel_j_decide, DecideConfig, Outcome, WitnessHint,
};

fn show(label: &str, v: &tropgreen::greens::Verdict) {
    print!("{label}: {}", v.outcome);
    if let Some(o) = &v.obstruction {
        print!("  [{o}]");
    }
    if !v.witnesses.is_empty() {
        print!("  [{} re-verifiable witness(es)]", v.witnesses.len());
    }
    println!();
}

fn main() {
    let cfg = DecideConfig::default();
    let (a, b) = (fixtures::a61(), fixtures::b61());

    println!("the finitary 4×4 pair:");
    let r = leq_r(&a, &b).unwrap();
    assert!(r.verify_witnesses(&a, &b));
    show("  A ≤_R B (exact, via principal solution)", &r);
    show("  B ≤_R A", &leq_r(&b, &a).unwrap());
    show("  A H B", &rel_h(&a, &b).unwrap());
    show("  A ≤_J B", &leq_j_decide(&a, &b, &cfg, None).unwrap());
    show("  A J B", &rel_j_decide(&a, &b, &cfg, None, None).unwrap());
    show("  A D B", &rel_d_decide(&a, &b, &cfg).unwrap());
    println!(
        "  (A ≤_J B holds while A J B fails: the J-order is strict here, and the\n\
         \x20  D-decider cites the generator-dimension obstruction)"
    );

    println!();
    println!("the T-flavored 4×4 pair with a monomial embedding hint:");
    let (a2, b2) = (fixtures::a62(), fixtures::b62());
    let hint = WitnessHint {
        embedding: Some(fixtures::mu62()),
        ..WitnessHint::default()
    };
    let v = rel_j_decide(&a2, &b2, &cfg, Some(&hint), Some(&hint)).unwrap();
    assert!(v.verify_witnesses(&a2, &b2));
    show("  A J B (hinted)", &v);
    println!(
        "  column ranks: {} vs {} — a verified J-pair on which column rank differs",
        tropgreen::ranks::col_rank(&a2),
        tropgreen::ranks::col_rank(&b2)
    );

    println!();
    println!("a sound obstruction in action:");
    let flat = tropgreen::TropMatrix::from_ints(
        tropgreen::SemiringFlavor::FT,
        &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]],
    );
    let v = leq_j_decide(&fixtures::a63(), &flat, &cfg, None).unwrap();
    show("  (3×3 example) ≤_J (all-zero matrix)", &v);
    match v.outcome {
        Outcome::Fails => println!("  tropical rank 3 cannot drop to 1 along the J-order"),
        _ => unreachable!("the rank battery proves this"),
    }
}
