//! Every non-simple verdict comes with a checkable witness.
//!
//! ```text
//! cargo run -p maxmin --example witnesses
//! ```
//!
//! When the boxed eigenspace is not simple, the checker does not just say
//! "no": it produces an eigenvector together with two distinct boxed
//! preimages. The witness is verified by substitution before it is
//! returned, so a `NotSimple` verdict can always be replayed with three
//! matrix-vector products.

use maxmin::conformism::{check_conforming, witness_second_preimage, Verdict};
use maxmin::instance::parse_instance;
use maxmin::spectral::is_eigenvector;
use maxmin::{IntervalVector, Matrix, Result, Vector};

fn replay(a: &Matrix, x: &IntervalVector, w: &maxmin::conformism::Witness) -> Result<()> {
    // the target is a boxed eigenvector...
    assert!(x.contains(&w.target)?);
    assert!(is_eigenvector(a, &w.target)?);
    // ...and both preimages are distinct boxed vectors mapping onto it
    assert_ne!(w.first, w.second);
    for pre in [&w.first, &w.second] {
        assert!(x.contains(pre)?);
        assert_eq!(a.apply(pre)?, w.target);
    }
    Ok(())
}

fn main() -> Result<()> {
    // twin rows: the level-gamma digraph is not a permutation
    let inst = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/twin_rows.toml"
    ))?;
    let report = check_conforming(&inst.matrix, &inst.bounds)?;
    assert_eq!(report.verdict, Verdict::NotSimple);
    let w = report.witness.as_ref().expect("non-simple verdicts carry a witness");
    println!("twin-rows witness:");
    println!("  eigenvector     {}", w.target);
    println!("  first preimage  {}", w.first);
    println!("  second preimage {}", w.second);
    replay(&inst.matrix, &inst.bounds, w)?;

    // the convenience accessor returns the same witness directly
    let again = witness_second_preimage(&inst.matrix, &inst.bounds)?;
    assert_eq!(again.target, w.target);

    // a subtler failure: the sample matrix with one upper bound lifted from
    // 5 to 6. The level permutation survives, but the lifted bound breaks
    // the ceiling condition on the arc into coordinate 4: the eigenvector
    // value 5 there can now also be produced by a preimage entry 6.
    let sample = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/sample.toml"
    ))?;
    let a = sample.matrix;
    let lifted = IntervalVector::new(
        sample.bounds.lower().clone(),
        Vector::from_ticks(vec![7, 9, 6, 6], a.top())?,
    )?;
    let report = check_conforming(&a, &lifted)?;
    assert_eq!(report.verdict, Verdict::NotSimple);
    for v in &report.violations {
        println!(
            "violated condition {} on arc ({} -> {})",
            v.kind.condition(),
            v.arc.0 + 1,
            v.arc.1 + 1
        );
    }
    let w = report.witness.as_ref().expect("witness");
    println!("lifted-bound witness:");
    println!("  eigenvector     {}", w.target);
    println!("  first preimage  {}", w.first);
    println!("  second preimage {}", w.second);
    replay(&a, &lifted, w)?;
    assert_eq!(w.first.ticks(), &[5, 6, 6, 5]);
    assert_eq!(w.second.ticks(), &[5, 6, 6, 6]);

    println!("all witnesses replay cleanly");
    Ok(())
}
