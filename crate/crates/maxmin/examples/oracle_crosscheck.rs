//! The brute-force oracle behind every analytic verdict.
//!
//! ```text
//! cargo run -p maxmin --example oracle_crosscheck
//! ```
//!
//! Each fast check in the crate is backed by an exhaustive one: enumerate a
//! finite grid of candidate vectors and test the property pointwise. The
//! *critical grid* refines the chain (scale 2, or 4 with one more
//! refinement) and keeps, per coordinate, the matrix entries, bounds,
//! targets and the midpoints between them — enough to witness any failure
//! of the properties checked here. This example replays three verdicts.

use maxmin::conformism::{check_conforming, Verdict};
use maxmin::instance::parse_instance;
use maxmin::oracle::{
    brute_x_simple, brute_x_simple_by_counting, enumerate_box_solutions, enumerate_eigenvectors,
    CriticalGrid, OracleLimits,
};
use maxmin::solver::{is_solvable, is_unique};
use maxmin::Result;

fn main() -> Result<()> {
    let inst = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/sample.toml"
    ))?;
    let a = &inst.matrix;
    let x = &inst.bounds;
    let b = inst.rhs.as_ref().expect("sample carries b");
    let limits = OracleLimits {
        max_candidates: 40,
        ..OracleLimits::default()
    };

    // grid construction: per coordinate, the critical values clipped to the
    // box, with midpoints on the doubled chain
    let grid = CriticalGrid::critical(a, x, &[b], false, &limits)?;
    let desc = grid.describe();
    println!(
        "critical grid at scale {}: {} points over the chain [0, {}]",
        desc.scale,
        grid.point_count(),
        desc.top
    );

    // 1. eigenvector enumeration vs the conformity verdict
    let eigen = enumerate_eigenvectors(&grid);
    println!("{} eigenvectors in the boxed grid", eigen.len());
    let report = check_conforming(a, x)?;
    assert_eq!(report.verdict, Verdict::Simple);
    let scan = brute_x_simple(&grid);
    assert!(scan.simple);
    println!("analytic Simple verdict confirmed by the sweep");
    // two independent oracle strategies agree with each other as well
    assert_eq!(scan.simple, brute_x_simple_by_counting(&grid));

    // 2. solver verdicts vs solution enumeration
    let sols = enumerate_box_solutions(&grid, b)?;
    assert_eq!(is_solvable(a, b, x)?, !sols.is_empty());
    assert_eq!(is_unique(a, b, x)?, sols.len() == 1);
    println!("solver verdicts match: {} solution(s) on the grid", sols.len());

    // 3. a refined grid (quarter steps) cannot change the verdicts
    let fine = CriticalGrid::critical(a, x, &[b], true, &limits)?;
    println!(
        "refined grid at scale {}: {} points",
        fine.describe().scale,
        fine.point_count()
    );
    assert_eq!(brute_x_simple(&fine).simple, scan.simple);
    assert_eq!(enumerate_box_solutions(&fine, b)?.len(), sols.len());
    println!("verdicts are stable under refinement");

    Ok(())
}
