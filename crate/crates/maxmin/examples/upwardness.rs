//! Scaling an eigenvector and tracking simplicity across the levels.
//!
//! ```text
//! cargo run -p maxmin --example upwardness
//! ```
//!
//! Scale an eigenvector `x` by a level: `y_alpha = alpha (x) x` is again an
//! eigenvector. Over the admissible levels (those within the box's
//! `[max lower, min upper]` range) the check validates the structural
//! monotonicity facts pair by pair — principal solutions grow with the
//! level and cover sets only shrink — and reports whether simplicity also
//! propagated upward. Usually it does, but that propagation is not a law:
//! a rising level can land a target entry exactly on a tied matrix entry,
//! dissolving the strict pin that forced uniqueness, and the second part
//! of this example shows a minimal instance where that happens.

use maxmin::instance::parse_instance;
use maxmin::oracle::{enumerate_box_solutions, CriticalGrid, OracleLimits};
use maxmin::robustness::upwardness_check;
use maxmin::spectral::greatest_eigenvector;
use maxmin::{IntervalVector, Matrix, Result, Scalar, Vector};

fn main() -> Result<()> {
    let inst = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/sample.toml"
    ))?;
    let a = &inst.matrix;
    let x = &inst.bounds;

    let eigen = greatest_eigenvector(a);
    println!("base eigenvector x+ = {eigen}");

    // admissible levels keep alpha (x) x+ inside the box: here 4 and 5
    let levels: Vec<Scalar> = [4, 5]
        .into_iter()
        .map(|t| Scalar::new(t, a.top()))
        .collect::<Result<_>>()?;
    let report = upwardness_check(a, x, &eigen, &levels)?;

    for level in &report.levels {
        println!(
            "level {}: y = {}, in box: {}, simple: {:?}",
            level.alpha, level.scaled, level.in_box, level.simple
        );
    }
    for pair in &report.pairs {
        println!(
            "pair ({}, {}): simple upward {}, principal monotone {}, structure {}, covers nested {}",
            pair.alpha,
            pair.beta,
            pair.simple_upward,
            pair.principal_monotone,
            pair.principal_structure,
            pair.cover_nested
        );
        assert!(pair.holds());
    }
    assert!(report.holds);
    assert_eq!(report.violating_pair, None);
    println!("upwardness holds over all {} pair(s)", report.pairs.len());

    // The propagation is not guaranteed. Both 7-entries of this matrix sit
    // on the anti-diagonal, the greatest eigenvector is (7, 7), and the box
    // ceiling (8, 8) leaves room above the entries. Level 6 pins both
    // coordinates strictly (7 > 6), so (6, 6) is its own only preimage;
    // level 7 lands exactly on the tied entries and every corner of
    // [7, 8] x [7, 8] maps onto (7, 7).
    println!();
    let a = Matrix::from_rows(vec![vec![0, 7], vec![7, 2]], 10)?;
    let x = IntervalVector::new(
        Vector::from_ticks(vec![0, 5], 10)?,
        Vector::from_ticks(vec![8, 8], 10)?,
    )?;
    let eigen = greatest_eigenvector(&a);
    println!("tied-entry instance: eigenvector {eigen}, box [{}, {}]", x.lower(), x.upper());

    let levels: Vec<Scalar> = (5..=8).map(|t| Scalar::new(t, 10)).collect::<Result<_>>()?;
    let report = upwardness_check(&a, &x, &eigen, &levels)?;
    for level in &report.levels {
        println!(
            "level {}: y = {}, above floor: {}, simple: {:?}",
            level.alpha, level.scaled, level.above_floor, level.simple
        );
    }
    assert!(!report.holds);
    let (alpha, beta) = report.violating_pair.expect("a violating pair");
    println!("simplicity does not reach level {beta} from level {alpha}");

    // re-verify by brute force: enumerate the preimages of 7 (x) eigen
    let grid = CriticalGrid::integer(&a, &x, &OracleLimits::default())?;
    let target = eigen.scale(Scalar::new(7, 10)?)?;
    let preimages = enumerate_box_solutions(&grid, &target)?;
    println!(
        "integer-grid preimages of {target}: {}",
        preimages
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    assert_eq!(preimages.len(), 4);

    // the structural facts are unaffected by the broken propagation
    for pair in &report.pairs {
        assert!(pair.principal_monotone && pair.principal_structure);
        assert!(pair.cover_nested && pair.cover_union_nested);
    }
    println!("principal monotonicity and cover nesting still hold on every pair");

    Ok(())
}
