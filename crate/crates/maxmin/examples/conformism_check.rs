//! Deciding whether the eigenspace restricted to a box is simple.
//!
//! ```text
//! cargo run -p maxmin --example conformism_check
//! ```
//!
//! For a box `X = [lower, upper]` an eigenvector is *X-simple* when it has
//! exactly one preimage under `A` inside the box. The whole boxed
//! eigenspace is simple exactly when the matrix is *X-conforming*: the
//! threshold digraph at the critical level `gamma` must be a permutation of
//! disjoint cycles, and three per-arc conditions must hold on each cycle.
//! The check is polynomial; no enumeration of the box is involved.

use maxmin::conformism::{check_conforming, eigenspace_structure, Verdict};
use maxmin::digraph::{gamma, level_permutation};
use maxmin::instance::parse_instance;
use maxmin::Result;

fn main() -> Result<()> {
    let inst = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/sample.toml"
    ))?;
    let a = &inst.matrix;
    let x = &inst.bounds;

    // the critical level: gamma = min(c(A), smallest upper bound)
    let g = gamma(a, x.upper())?;
    println!("gamma = {g}");

    // at that level the matrix must look like a permutation: exactly one
    // entry >= gamma in every row and every column
    let dec = level_permutation(a, g)?.expect("sample has a level-gamma permutation");
    let cycles: Vec<String> = dec
        .cycles
        .iter()
        .map(|c| {
            let one_based: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            format!("({})", one_based.join(" "))
        })
        .collect();
    println!("level-{g} permutation with cycles {}", cycles.join(""));

    let report = check_conforming(a, x)?;
    println!("verdict: {:?}", report.verdict);
    assert_eq!(report.verdict, Verdict::Simple);
    assert_eq!(report.gamma, Some(g));

    // the simple eigenvectors fill a sub-box [e, f], constant on each cycle
    let bounds = report.bounds.as_ref().expect("simple verdict carries bounds");
    println!("boxed eigenvectors form the sub-box [{}, {}]", bounds.lower, bounds.upper);
    assert_eq!(bounds.lower.ticks(), &[4, 3, 3, 4]);
    assert_eq!(bounds.upper.ticks(), &[5, 6, 6, 5]);

    // per-cycle description: on the cycle through 1 and 4 the value ranges
    // over [4, 5], on the cycle through 2 and 3 over [3, 6]
    for range in eigenspace_structure(a, x)? {
        let members: Vec<String> = range.cycle.iter().map(|i| (i + 1).to_string()).collect();
        println!(
            "cycle {{{}}} carries any constant value in [{}, {}]",
            members.join(", "),
            range.low,
            range.high
        );
    }

    // shrinking the box can break the preconditions: with a lower bound
    // touching the greatest constant eigenvector the test does not apply
    let tight = maxmin::IntervalVector::new(
        maxmin::Vector::from_ticks(vec![5, 3, 2, 4], a.top())?,
        inst.bounds.upper().clone(),
    )?;
    let report = check_conforming(a, &tight)?;
    println!("with lower bound (5, 3, 2, 4): {:?}", report.verdict);
    assert_eq!(report.verdict, Verdict::Inapplicable);

    Ok(())
}
