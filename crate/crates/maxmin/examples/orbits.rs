//! Orbits `x, A(x)x, A^2(x)x, ...` and attraction to the eigenspace.
//!
//! ```text
//! cargo run -p maxmin --example orbits
//! ```
//!
//! Over a finite chain every orbit is ultimately periodic. An orbit either
//! reaches a fixed point (the start vector is *attracted* to the
//! eigenspace) or falls into a cycle of period at least two.

use maxmin::instance::parse_instance;
use maxmin::robustness::in_attraction;
use maxmin::spectral::orbit;
use maxmin::{Result, Vector};

fn main() -> Result<()> {
    let inst = parse_instance(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/sample.toml"
    ))?;
    let a = &inst.matrix;

    for (ticks, expect_hit) in [
        (vec![5, 7, 8, 7], true),  // converges to an eigenvector
        (vec![4, 4, 4, 4], true),  // already fixed
        (vec![7, 9, 6, 5], false), // falls into a period-2 cycle
    ] {
        let start = Vector::from_ticks(ticks, a.top())?;
        let summary = orbit(a, &start)?;
        let trace: Vec<String> = summary.prefix.iter().map(|v| v.to_string()).collect();
        println!("orbit of {start}:");
        println!("  trace     {}", trace.join(" -> "));
        println!(
            "  transient {}, period {}, reaches a fixed point: {}",
            summary.transient, summary.period, summary.hits_eigenvector
        );
        assert_eq!(summary.hits_eigenvector, expect_hit);
        assert_eq!(in_attraction(a, &start)?, expect_hit);
        // a fixed point is exactly a period-1 tail
        assert_eq!(summary.hits_eigenvector, summary.period == 1);
    }

    // the periodic part of the non-attracted orbit: two vectors swapping
    let start = Vector::from_ticks(vec![7, 9, 6, 5], a.top())?;
    let summary = orbit(a, &start)?;
    let u = &summary.prefix[summary.transient];
    let v = a.apply(u)?;
    assert_ne!(*u, v);
    assert_eq!(a.apply(&v)?, *u);
    println!("period-2 cycle: {u} <-> {v}");

    Ok(())
}
