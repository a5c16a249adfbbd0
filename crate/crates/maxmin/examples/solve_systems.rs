//! Solving `A (x) x = b` inside a box, with uniqueness analysis.
//!
//! ```text
//! cargo run -p maxmin --example solve_systems
//! ```
//!
//! The boxed solution set of a max-min system is either empty or has a
//! greatest element, the *principal solution* `x~`: each coordinate is the
//! smallest right-hand side its column is forced below, capped at the upper
//! bound. Solvability and uniqueness are then decided by substitution and
//! by the cover sets (which rows each column can satisfy) — no search.

use maxmin::instance::parse_instance;
use maxmin::solver::{
    cover_sets, enumerate_solutions, is_solvable, is_unique, principal_solution, reduce_system,
    solve, ReductionOutcome,
};
use maxmin::oracle::OracleLimits;
use maxmin::{Result, Vector};

fn main() -> Result<()> {
    let inst = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/sample.toml"
    ))?;
    let a = &inst.matrix;
    let x = &inst.bounds;
    let b = inst.rhs.as_ref().expect("sample carries b").clone();

    let tilde = principal_solution(a, &b, x)?;
    println!("principal solution x~ = {tilde}");
    assert_eq!(a.apply(&tilde)?, b); // solvable: substitution hits b exactly
    assert!(is_solvable(a, &b, x)?);
    assert!(is_unique(a, &b, x)?);
    println!("the system is solvable and x~ is the only boxed solution");

    // cover sets: which rows does each column satisfy at the principal
    // solution? Uniqueness needs a private pinned row per free column.
    for (j, rows) in cover_sets(a, &b, x)?.iter().enumerate() {
        let rows1: Vec<String> = rows.iter().map(|i| (i + 1).to_string()).collect();
        println!("column {} covers rows {{{}}}", j + 1, rows1.join(", "));
    }

    // the exhaustive cross-check agrees: exactly one solution on the grid
    let limits = OracleLimits {
        max_candidates: 40,
        ..OracleLimits::default()
    };
    let sols = enumerate_solutions(a, &b, x, &limits)?;
    assert_eq!(sols.vectors.len(), 1);
    println!("grid enumeration found {} solution(s)", sols.vectors.len());

    // an unsolvable right-hand side: row 1 demands 7, but its entries and
    // the caps forced by the other rows keep it at 5
    let bad = Vector::from_ticks(vec![7, 3, 3, 5], a.top())?;
    let report = solve(a, &bad, x)?;
    assert!(!report.solvable);
    println!(
        "b = {bad}: unsolvable; best attempt A (x) x~ = {}",
        a.apply(&report.principal)?
    );
    match report.reduction {
        Some(ReductionOutcome::Unsolvable(conflict)) => {
            println!("reduction already proves it: {conflict:?}");
        }
        Some(ReductionOutcome::Reduced(_)) => println!("reduction alone cannot tell"),
        None => println!("b leaves the box, reduction skipped"),
    }

    // system reduction on a solvable instance: rows pinned to the lower
    // bound drop out, columns forced by large entries get fixed
    let id = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/identity.toml"
    ))?;
    let b_id = Vector::from_ticks(vec![0, 7], id.matrix.top())?;
    match reduce_system(&id.matrix, &b_id, &id.bounds)? {
        ReductionOutcome::Reduced(red) => {
            println!(
                "identity system with b = {b_id}: keep rows {:?}, columns {:?}",
                red.kept_rows, red.kept_columns
            );
            for (j, v) in &red.forced {
                println!("  column {} is forced to {v}", j + 1);
            }
        }
        ReductionOutcome::Unsolvable(c) => println!("unsolvable: {c:?}"),
    }

    Ok(())
}
