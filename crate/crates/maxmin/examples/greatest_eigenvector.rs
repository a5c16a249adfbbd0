//! The eigenspace of a max-min matrix and its greatest element.
//!
//! ```text
//! cargo run -p maxmin --example greatest_eigenvector
//! ```
//!
//! Eigenvectors of `A` are the fixed points `A (x) x = x` (the only
//! eigenvalue worth studying on a chain is the unit). The eigenspace always
//! contains a greatest element `x+`, reached from the row-maxima vector in
//! at most `n` applications of `A`.

use maxmin::instance::parse_instance;
use maxmin::spectral::{aggregates, greatest_eigenvector_detailed, is_eigenvector};
use maxmin::{Result, Scalar, Vector};

fn main() -> Result<()> {
    let inst = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/sample.toml"
    ))?;
    let a = &inst.matrix;

    let agg = aggregates(a);
    println!("row maxima:                    {}", agg.row_maxima);
    println!("largest entry m(A):            {}", agg.max_entry);
    println!("smallest row maximum c(A):     {}", agg.min_row_max);
    println!("greatest constant eigenvector: {}", agg.greatest_constant);

    // iterate x -> A (x) x from the row maxima; the sequence is decreasing
    // and stops at the greatest eigenvector
    let (xplus, steps) = greatest_eigenvector_detailed(a);
    println!("greatest eigenvector x+ = {xplus} (confirmed after {steps} iteration(s))");
    assert_eq!(xplus.ticks(), &[5, 7, 7, 5]);
    assert!(is_eigenvector(a, &xplus)?);

    // every constant vector at or below c(A) is an eigenvector...
    for kappa in 0..=agg.min_row_max.ticks() {
        let konst = Vector::constant(a.n(), Scalar::new(kappa, a.top())?);
        assert!(is_eigenvector(a, &konst)?);
    }
    // ...and no larger constant is
    let above = Vector::constant(a.n(), Scalar::new(agg.min_row_max.ticks() + 1, a.top())?);
    assert!(!is_eigenvector(a, &above)?);
    println!(
        "constants 0..={} are eigenvectors, {} is not",
        agg.min_row_max,
        agg.min_row_max.ticks() + 1
    );

    // x+ dominates every eigenvector: test a few known ones
    for ticks in [vec![4, 4, 4, 4], vec![5, 6, 6, 5], vec![5, 7, 7, 5]] {
        let v = Vector::from_ticks(ticks, a.top())?;
        assert!(is_eigenvector(a, &v)?);
        assert!(v.ticks().iter().zip(xplus.ticks()).all(|(&p, &q)| p <= q));
        println!("eigenvector {v} <= x+");
    }

    Ok(())
}
