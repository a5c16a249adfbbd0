//! Weak robustness: does every attracted orbit start at an eigenvector?
//!
//! ```text
//! cargo run -p maxmin --example robustness
//! ```
//!
//! A matrix is *weakly robust* when the only vectors whose orbit reaches a
//! fixed point are the fixed points themselves. On a box it is *weakly
//! X-robust* when the only boxed vectors mapped onto boxed eigenvectors are
//! those eigenvectors. The chain is finite, so both notions are decided
//! exactly by scanning the relevant grid; counterexamples come out
//! lexicographically smallest first.

use maxmin::instance::parse_instance;
use maxmin::oracle::OracleLimits;
use maxmin::robustness::{
    is_invariant, is_weakly_robust, is_x_simple_vector, robustness_report,
};
use maxmin::{IntervalVector, Matrix, Result, Vector};

fn main() -> Result<()> {
    let limits = OracleLimits::default();

    // the identity is weakly robust: everything is already fixed
    let id = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/identity.toml"
    ))?;
    let report = is_weakly_robust(&id.matrix, &limits)?;
    println!("identity weakly robust: {}", report.holds);
    assert!(report.holds);

    // a saturated matrix is not: it sends everything to a constant
    let top = 10;
    let sat = Matrix::from_rows(vec![vec![top, top], vec![top, top]], top)?;
    let report = is_weakly_robust(&sat, &limits)?;
    assert!(!report.holds);
    let ce = report.counterexample.as_ref().expect("counterexample");
    println!("all-tens matrix: not weakly robust, counterexample {ce}");
    assert_eq!(ce.ticks(), &[0, 1]); // (0,1) -> (1,1), fixed but not at the start
    // the three equivalent readings always agree
    assert_eq!(report.fixed_point_closure, report.simple_image_form);
    assert_eq!(report.simple_image_form, report.orbit_form);

    // boxed robustness on the sample instance
    let inst = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/sample.toml"
    ))?;
    let a = &inst.matrix;
    let limits = OracleLimits {
        max_candidates: 40,
        ..OracleLimits::default()
    };
    let rep = robustness_report(a, &inst.bounds, &limits)?;
    println!("sample box: weakly X-robust = {}", rep.weakly_x_robust);
    println!("sample box invariant under A: {}", rep.x_invariant);
    // the box is not invariant: A maps the corner (7, 9, 6, 5) outside
    assert!(!rep.x_invariant);
    assert!(!is_invariant(a, &inst.bounds)?);

    // the eigenvector sub-box [e, f] from the conformity check is
    // invariant, and on it the matrix is weakly X-robust
    let ef = IntervalVector::new(
        Vector::from_ticks(vec![4, 3, 3, 4], a.top())?,
        Vector::from_ticks(vec![5, 6, 6, 5], a.top())?,
    )?;
    assert!(is_invariant(a, &ef)?);
    let rep = robustness_report(a, &ef, &limits)?;
    println!("[e, f] box: weakly X-robust = {}", rep.weakly_x_robust);
    assert!(rep.weakly_x_robust);

    // X-simplicity of single vectors: a boxed eigenvector with exactly one
    // boxed preimage
    for (ticks, expect) in [
        (vec![5, 6, 6, 5], true),  // unique preimage
        (vec![4, 4, 4, 4], true),  // unique preimage
        (vec![7, 9, 6, 5], false), // not an eigenvector at all
    ] {
        let v = Vector::from_ticks(ticks, a.top())?;
        let simple = is_x_simple_vector(a, &inst.bounds, &v)?;
        println!("{v} X-simple: {simple}");
        assert_eq!(simple, expect);
    }

    Ok(())
}
